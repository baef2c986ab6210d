//! Minuscule Littelmann paths and the Pieri dimension count.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_rank, input, Error, Result};
use crate::weights::{weyl_orbit, Dominance, OrbitWeight, Weight};

/// A sequence of weights `μ_0 = 0, μ_1, …, μ_k` whose steps are minuscule.
///
/// Paths built with [`MinusculePath::new`] are dominant at every point.
/// [`MinusculePath::unrestricted`] drops that requirement, which is what the
/// triangular-diagram side weights are tested against.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Weight>", into = "Vec<Weight>")]
pub struct MinusculePath {
    points: Vec<Weight>,
    steps: Vec<OrbitWeight>,
    dominant: bool,
}

impl MinusculePath {
    pub fn new(points: Vec<Weight>) -> Result<MinusculePath> {
        let path = MinusculePath::unrestricted(points)?;
        if let Some(bad) = path.points.iter().position(|p| !p.is_dominant()) {
            return input(format!("point {bad} of the path is not dominant"));
        }
        Ok(path)
    }

    pub fn unrestricted(points: Vec<Weight>) -> Result<MinusculePath> {
        let Some(first) = points.first() else {
            return input("a path needs at least the starting point");
        };
        let n = first.n();
        if !first.is_zero() {
            return input("a path must start at the zero weight");
        }
        let mut steps = Vec::with_capacity(points.len() - 1);
        for (i, pair) in points.windows(2).enumerate() {
            check_rank(n, pair[1].n())?;
            let step = &pair[1] - &pair[0];
            match OrbitWeight::new(step) {
                Some(o) => steps.push(o),
                None => return input(format!("step {} of the path is not minuscule", i + 1)),
            }
        }
        let dominant = points.iter().all(Weight::is_dominant);
        Ok(MinusculePath {
            points,
            steps,
            dominant,
        })
    }

    /// Builds the path whose consecutive differences are `steps`.
    pub fn from_steps(n: usize, steps: &[Weight]) -> Result<MinusculePath> {
        let mut points = vec![Weight::zero(n)];
        for s in steps {
            check_rank(n, s.n())?;
            let next = points.last().expect("nonempty") + s;
            points.push(next);
        }
        MinusculePath::unrestricted(points)
    }

    pub fn n(&self) -> usize {
        self.points[0].n()
    }

    pub fn points(&self) -> &[Weight] {
        &self.points
    }

    pub fn steps(&self) -> &[OrbitWeight] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn endpoint(&self) -> &Weight {
        self.points.last().expect("nonempty")
    }

    pub fn is_dominant(&self) -> bool {
        self.dominant
    }

    pub fn is_closed(&self) -> bool {
        self.endpoint().is_zero()
    }

    /// The type `λ` as fundamental indices.
    pub fn type_indices(&self) -> Vec<usize> {
        self.steps.iter().map(OrbitWeight::class).collect()
    }
}

impl TryFrom<Vec<Weight>> for MinusculePath {
    type Error = Error;

    fn try_from(points: Vec<Weight>) -> Result<MinusculePath> {
        MinusculePath::unrestricted(points)
    }
}

impl From<MinusculePath> for Vec<Weight> {
    fn from(p: MinusculePath) -> Vec<Weight> {
        p.points
    }
}

impl fmt::Display for MinusculePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", p.fundamental_string())?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MinusculePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MinusculePath{self}")
    }
}

fn check_boundary(n: usize, boundary: &[usize]) -> Result<()> {
    if n < 2 {
        return input(format!("rank parameter must be at least 2, got {n}"));
    }
    if let Some(&k) = boundary.iter().find(|&&k| k == 0 || k >= n) {
        return input(format!("boundary index {k} out of range 1..{}", n - 1));
    }
    Ok(())
}

/// All of `P_λ(ν)`, in lexicographic order of the point sequences.
pub fn enumerate_paths(
    n: usize,
    boundary: &[usize],
    endpoint: &Weight,
) -> Result<Vec<MinusculePath>> {
    check_boundary(n, boundary)?;
    check_rank(n, endpoint.n())?;
    if !endpoint.is_dominant() {
        return input(format!("endpoint {endpoint} is not dominant"));
    }
    let mut orbits: HashMap<usize, Vec<Weight>> = HashMap::new();
    for &k in boundary {
        orbits.entry(k).or_insert_with(|| {
            let mut o: Vec<Weight> = weyl_orbit(n, k)
                .expect("index checked")
                .into_iter()
                .map(|o| o.weight().clone())
                .collect();
            o.sort();
            o
        });
    }
    let mut search = Search {
        boundary,
        endpoint,
        orbits: &orbits,
        reachable: HashMap::new(),
        stack: vec![Weight::zero(n)],
        out: Vec::new(),
    };
    search.descend(0);
    Ok(search.out)
}

struct Search<'a> {
    boundary: &'a [usize],
    endpoint: &'a Weight,
    orbits: &'a HashMap<usize, Vec<Weight>>,
    reachable: HashMap<(usize, Weight), bool>,
    stack: Vec<Weight>,
    out: Vec<MinusculePath>,
}

impl Search<'_> {
    fn successors(&self, depth: usize, from: &Weight) -> Vec<Weight> {
        let mut next: Vec<Weight> = self.orbits[&self.boundary[depth]]
            .iter()
            .map(|s| from + s)
            .filter(Weight::is_dominant)
            .collect();
        next.sort();
        next
    }

    fn can_finish(&mut self, depth: usize, at: &Weight) -> bool {
        if depth == self.boundary.len() {
            return at == self.endpoint;
        }
        let key = (depth, at.clone());
        if let Some(&r) = self.reachable.get(&key) {
            return r;
        }
        let succ = self.successors(depth, at);
        let r = succ.iter().any(|s| self.can_finish(depth + 1, s));
        self.reachable.insert(key, r);
        r
    }

    fn descend(&mut self, depth: usize) {
        let here = self.stack.last().expect("nonempty").clone();
        if !self.can_finish(depth, &here) {
            return;
        }
        if depth == self.boundary.len() {
            let path = MinusculePath::new(self.stack.clone()).expect("search yields valid paths");
            self.out.push(path);
            return;
        }
        for s in self.successors(depth, &here) {
            self.stack.push(s);
            self.descend(depth + 1);
            self.stack.pop();
        }
    }
}

/// Componentwise dominance of two paths of the same type.
pub fn path_compare(a: &MinusculePath, b: &MinusculePath) -> Result<Dominance> {
    check_rank(a.n(), b.n())?;
    if a.len() != b.len() || a.type_indices() != b.type_indices() {
        return input("paths of different type are not comparable");
    }
    Ok(a.points
        .iter()
        .zip(&b.points)
        .map(|(x, y)| x.dominance_cmp_unchecked(y))
        .fold(Dominance::Equal, Dominance::combine))
}

/// Multiplicity of the rectangle `(m^n)` in `e_{k_1}⋯e_{k_r}`, by repeated
/// vertical-strip additions over partitions with at most `n` rows.
pub fn pieri_dimension(n: usize, boundary: &[usize]) -> Result<u128> {
    check_boundary(n, boundary)?;
    let total: usize = boundary.iter().sum();
    if !total.is_multiple_of(n) {
        return Ok(0);
    }
    let m = (total / n) as u32;
    let mut layer: HashMap<Vec<u32>, u128> = HashMap::from([(vec![0; n], 1)]);
    for &k in boundary {
        let mut next: HashMap<Vec<u32>, u128> = HashMap::new();
        for (shape, count) in layer {
            add_vertical_strips(&shape, k, m, &mut |grown| {
                let slot = next.entry(grown).or_insert(0);
                *slot = slot.checked_add(count).expect("Pieri count overflow");
            });
        }
        layer = next;
    }
    Ok(layer.get(&vec![m; n]).copied().unwrap_or(0))
}

fn add_vertical_strips(shape: &[u32], k: usize, cap: u32, emit: &mut impl FnMut(Vec<u32>)) {
    fn go(
        shape: &[u32],
        row: usize,
        left: usize,
        cap: u32,
        cur: &mut Vec<u32>,
        emit: &mut impl FnMut(Vec<u32>),
    ) {
        if row == shape.len() {
            if left == 0 {
                emit(cur.clone());
            }
            return;
        }
        if shape.len() - row < left {
            return;
        }
        // Leave this row alone.
        go(shape, row + 1, left, cap, cur, emit);
        // Grow it, if the result stays a partition and fits the rectangle.
        let grown = shape[row] + 1;
        let fits_above = row == 0 || cur[row - 1] >= grown;
        if left > 0 && fits_above && grown <= cap {
            cur[row] = grown;
            go(shape, row + 1, left - 1, cap, cur, emit);
            cur[row] = shape[row];
        }
    }
    let mut cur = shape.to_vec();
    go(shape, 0, k, cap, &mut cur, emit);
}

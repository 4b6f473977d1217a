//! Linear and semilinear subsets of N^k over named coordinates.
//!
//! A [`SemilinearSet`] is a finite union of linear sets `c + N·p1 + … + N·pm`.
//! Representations are kept canonical (zero periods dropped, periods and
//! components sorted and deduplicated) but never minimized; two sets with
//! different representations are compared through membership.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hilbert::hilbert_basis;
use crate::letter::Letter;

/// Ordered list of distinct coordinate labels.
#[derive(Clone, Debug, Hash)]
pub struct CoordSpace {
    names: Arc<[Letter]>,
}

impl PartialEq for CoordSpace {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Eq for CoordSpace {}

impl CoordSpace {
    pub fn new(names: Vec<Letter>) -> Result<Self> {
        let mut seen = HashSet::new();
        for n in &names {
            if !seen.insert(n) {
                return Err(Error::input(format!("duplicate coordinate label {n}")));
            }
        }
        Ok(CoordSpace {
            names: names.into(),
        })
    }

    /// Space over the given letters in canonical letter order.
    pub fn canonical(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut names: Vec<Letter> = letters.into_iter().collect();
        names.sort();
        names.dedup();
        CoordSpace {
            names: names.into(),
        }
    }

    /// The zero-dimensional space.
    pub fn empty() -> Self {
        CoordSpace {
            names: Vec::new().into(),
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[Letter] {
        &self.names
    }

    pub fn index_of(&self, label: &Letter) -> Option<usize> {
        self.names.iter().position(|n| n == label)
    }

    pub fn contains(&self, label: &Letter) -> bool {
        self.index_of(label).is_some()
    }

    /// Canonical space holding the labels of both.
    pub fn join(&self, other: &CoordSpace) -> CoordSpace {
        CoordSpace::canonical(self.names.iter().chain(other.names.iter()).cloned())
    }
}

/// A vector of naturals indexed by a coordinate space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorN {
    space: CoordSpace,
    entries: Vec<u64>,
}

impl VectorN {
    pub fn new(space: CoordSpace, entries: Vec<u64>) -> Result<Self> {
        if entries.len() != space.dim() {
            return Err(Error::input(format!(
                "vector has {} entries but space has dimension {}",
                entries.len(),
                space.dim()
            )));
        }
        Ok(VectorN { space, entries })
    }

    pub fn zero(space: CoordSpace) -> Self {
        let entries = vec![0; space.dim()];
        VectorN { space, entries }
    }

    /// Letter-count vector of `word`; letters outside the space are ignored.
    pub fn parikh(space: CoordSpace, word: &[Letter]) -> Self {
        let mut entries = vec![0; space.dim()];
        for l in word {
            if let Some(i) = space.index_of(l) {
                entries[i] += 1;
            }
        }
        VectorN { space, entries }
    }

    pub fn space(&self) -> &CoordSpace {
        &self.space
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn get(&self, label: &Letter) -> Option<u64> {
        self.space.index_of(label).map(|i| self.entries[i])
    }
}

/// `constant + N·periods`. Periods are nonzero, sorted and distinct.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearSet {
    constant: Vec<u64>,
    periods: Vec<Vec<u64>>,
}

impl LinearSet {
    pub fn new(constant: Vec<u64>, periods: Vec<Vec<u64>>) -> Self {
        let mut periods: Vec<Vec<u64>> = periods
            .into_iter()
            .filter(|p| p.iter().any(|&x| x > 0))
            .collect();
        periods.sort();
        periods.dedup();
        LinearSet { constant, periods }
    }

    pub fn point(constant: Vec<u64>) -> Self {
        LinearSet {
            constant,
            periods: Vec::new(),
        }
    }

    pub fn constant(&self) -> &[u64] {
        &self.constant
    }

    pub fn periods(&self) -> &[Vec<u64>] {
        &self.periods
    }

    pub fn dim(&self) -> usize {
        self.constant.len()
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        if v.len() != self.constant.len() || !le(&self.constant, v) {
            return false;
        }
        let rest = sub(v, &self.constant);
        in_monoid(&rest, &self.periods)
    }

    /// Sufficient test for `self ⊆ other`: the constant lies in `other` and
    /// every period lies in the monoid of `other`'s periods.
    pub fn included_in(&self, other: &LinearSet) -> bool {
        if !le(&other.constant, &self.constant) {
            return false;
        }
        let other_support = support_of(&other.periods, self.dim());
        let covered = |v: &[u64]| v.iter().zip(&other_support).all(|(&x, &s)| x == 0 || s);
        if !covered(&sub(&self.constant, &other.constant))
            || !self.periods.iter().all(|p| covered(p))
        {
            return false;
        }
        other.contains(&self.constant) && self.periods.iter().all(|p| in_monoid(p, &other.periods))
    }

    /// Drops periods generated by the remaining ones.
    pub fn without_redundant_periods(mut self) -> Self {
        let mut i = 0;
        while i < self.periods.len() {
            let p = self.periods[i].clone();
            let others: Vec<Vec<u64>> = self
                .periods
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, q)| q.clone())
                .collect();
            if in_monoid(&p, &others) {
                self.periods.remove(i);
            } else {
                i += 1;
            }
        }
        self
    }

    fn sum(&self, other: &LinearSet) -> LinearSet {
        LinearSet::new(
            add(&self.constant, &other.constant),
            self.periods.iter().chain(&other.periods).cloned().collect(),
        )
    }

    /// Kleene closure of a linear set as a union of linear sets.
    fn star(&self) -> Vec<LinearSet> {
        let zero = vec![0; self.dim()];
        if self.constant == zero {
            return vec![self.clone()];
        }
        let mut periods = self.periods.clone();
        periods.push(self.constant.clone());
        if self.periods.is_empty() {
            return vec![LinearSet::new(zero, periods)];
        }
        vec![
            LinearSet::point(zero),
            LinearSet::new(self.constant.clone(), periods),
        ]
    }

    fn select(&self, idx: &[usize]) -> LinearSet {
        LinearSet::new(
            idx.iter().map(|&i| self.constant[i]).collect(),
            self.periods
                .iter()
                .map(|p| idx.iter().map(|&i| p[i]).collect())
                .collect(),
        )
    }
}

/// Finite union of linear sets over one coordinate space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SemilinearSet {
    space: CoordSpace,
    components: Vec<LinearSet>,
}

impl SemilinearSet {
    pub fn new(space: CoordSpace, components: Vec<LinearSet>) -> Result<Self> {
        for c in &components {
            if c.constant.len() != space.dim() || c.periods.iter().any(|p| p.len() != space.dim())
            {
                return Err(Error::input("linear set dimension differs from its space"));
            }
        }
        Ok(Self::from_parts(space, components))
    }

    pub(crate) fn from_parts(space: CoordSpace, mut components: Vec<LinearSet>) -> Self {
        components.sort();
        components.dedup();
        SemilinearSet { space, components }
    }

    pub fn empty(space: CoordSpace) -> Self {
        SemilinearSet {
            space,
            components: Vec::new(),
        }
    }

    /// The zero-dimensional nonempty set.
    pub fn unit() -> Self {
        SemilinearSet {
            space: CoordSpace::empty(),
            components: vec![LinearSet::point(Vec::new())],
        }
    }

    /// `{0}` in the given space.
    pub fn zero(space: CoordSpace) -> Self {
        let d = space.dim();
        SemilinearSet {
            space,
            components: vec![LinearSet::point(vec![0; d])],
        }
    }

    pub fn singleton(v: &VectorN) -> Self {
        SemilinearSet {
            space: v.space.clone(),
            components: vec![LinearSet::point(v.entries.clone())],
        }
    }

    /// `{x + N·periods}` built from labelled vectors.
    pub fn linear(constant: &VectorN, periods: &[VectorN]) -> Result<Self> {
        if periods.iter().any(|p| p.space != constant.space) {
            return Err(Error::input("periods live in a different space"));
        }
        Ok(SemilinearSet {
            space: constant.space.clone(),
            components: vec![LinearSet::new(
                constant.entries.clone(),
                periods.iter().map(|p| p.entries.clone()).collect(),
            )],
        })
    }

    pub fn space(&self) -> &CoordSpace {
        &self.space
    }

    pub fn components(&self) -> &[LinearSet] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Membership by bounded search over period multiplicities.
    pub fn member(&self, v: &VectorN) -> Result<bool> {
        self.check_space(&v.space)?;
        Ok(self.contains(&v.entries))
    }

    /// Membership of a raw vector in this set's coordinate order.
    pub fn contains(&self, v: &[u64]) -> bool {
        self.components.iter().any(|c| c.contains(v))
    }

    pub fn union(&self, other: &SemilinearSet) -> Result<SemilinearSet> {
        self.check_space(&other.space)?;
        Ok(Self::from_parts(
            self.space.clone(),
            self.components
                .iter()
                .chain(&other.components)
                .cloned()
                .collect(),
        ))
    }

    /// Intersection computed component by component: `c1 + P1·λ = c2 + P2·μ`
    /// is solved with [`hilbert_basis`] and every solution family is pushed
    /// back through `c1 + P1·λ`.
    pub fn intersect(&self, other: &SemilinearSet) -> Result<SemilinearSet> {
        self.check_space(&other.space)?;
        let mut out = Vec::new();
        for a in &self.components {
            for b in &other.components {
                out.extend(intersect_linear(a, b)?);
            }
        }
        Ok(Self::from_parts(self.space.clone(), out))
    }

    /// Keeps the coordinates named in `keep`, in this set's order.
    pub fn project(&self, keep: &[Letter]) -> Result<SemilinearSet> {
        for k in keep {
            if !self.space.contains(k) {
                return Err(Error::input(format!("unknown coordinate {k}")));
            }
        }
        let idx: Vec<usize> = self
            .space
            .names()
            .iter()
            .enumerate()
            .filter(|(_, n)| keep.contains(n))
            .map(|(i, _)| i)
            .collect();
        let space = CoordSpace::new(idx.iter().map(|&i| self.space.names[i].clone()).collect())?;
        Ok(Self::from_parts(
            space,
            self.components.iter().map(|c| c.select(&idx)).collect(),
        ))
    }

    /// Deletes the named coordinates.
    pub fn project_out(&self, drop: &[Letter]) -> Result<SemilinearSet> {
        let keep: Vec<Letter> = self
            .space
            .names()
            .iter()
            .filter(|n| !drop.contains(n))
            .cloned()
            .collect();
        self.project(&keep)
    }

    /// Intersection with `{f : row · f = 0 for every row}`, rows indexed like
    /// this set's coordinates. Each component reduces to a system in its own
    /// period multiplicities, solved with [`hilbert_basis`].
    pub fn constrain(&self, rows: &[Vec<i64>]) -> Result<SemilinearSet> {
        let d = self.space.dim();
        if rows.iter().any(|r| r.len() != d) {
            return Err(Error::input("constraint row has wrong length"));
        }
        let mut out = Vec::new();
        for c in &self.components {
            out.extend(constrain_linear(c, rows)?);
        }
        Ok(Self::from_parts(self.space.clone(), out))
    }

    /// Intersection with `{f : f(a) = f(b)}`.
    pub fn constrain_equal(&self, a: &Letter, b: &Letter) -> Result<SemilinearSet> {
        let (ia, ib) = match (self.space.index_of(a), self.space.index_of(b)) {
            (Some(x), Some(y)) => (x, y),
            _ => return Err(Error::input(format!("unknown coordinate {a} or {b}"))),
        };
        let mut row = vec![0i64; self.space.dim()];
        row[ia] += 1;
        row[ib] -= 1;
        self.constrain(&[row])
    }

    /// Minkowski sum.
    pub fn sum(&self, other: &SemilinearSet) -> Result<SemilinearSet> {
        self.check_space(&other.space)?;
        let mut out = Vec::with_capacity(self.components.len() * other.components.len());
        for a in &self.components {
            for b in &other.components {
                out.push(a.sum(b));
            }
        }
        Ok(Self::from_parts(self.space.clone(), out))
    }

    /// Submonoid generated by the set.
    pub fn star(&self) -> SemilinearSet {
        // all point components together generate one linear set
        let points: Vec<Vec<u64>> = self
            .components
            .iter()
            .filter(|c| c.periods.is_empty())
            .map(|c| c.constant.clone())
            .collect();
        let base = LinearSet::new(vec![0; self.space.dim()], points);
        let mut acc = SemilinearSet::from_parts(self.space.clone(), vec![base]);
        for c in self.components.iter().filter(|c| !c.periods.is_empty()) {
            let s = SemilinearSet::from_parts(self.space.clone(), c.star());
            acc = acc.sum(&s).expect("same space").simplified();
        }
        acc
    }

    /// The `m`-fold Minkowski sum `self + … + self` (`{0}` for `m = 0`).
    pub fn multiple(&self, m: u64) -> SemilinearSet {
        let mut acc = SemilinearSet::zero(self.space.clone());
        let mut base = self.clone();
        let mut m = m;
        while m > 0 {
            if m & 1 == 1 {
                acc = acc.sum(&base).expect("same space").simplified();
            }
            m >>= 1;
            if m > 0 {
                base = base.sum(&base).expect("same space").simplified();
            }
        }
        acc
    }

    /// Re-expresses the set in a space containing every coordinate that is
    /// nonzero somewhere in the representation; coordinates missing from
    /// `target` must be zero throughout.
    pub fn embed(&self, target: &CoordSpace) -> Result<SemilinearSet> {
        if *target == self.space {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.space.dim());
        for (i, n) in self.space.names().iter().enumerate() {
            match target.index_of(n) {
                Some(j) => map.push(Some(j)),
                None => {
                    let used = self.components.iter().any(|c| {
                        c.constant[i] != 0 || c.periods.iter().any(|p| p[i] != 0)
                    });
                    if used {
                        return Err(Error::input(format!(
                            "coordinate {n} is used but missing from the target space"
                        )));
                    }
                    map.push(None);
                }
            }
        }
        let d = target.dim();
        let move_vec = |v: &[u64]| {
            let mut out = vec![0u64; d];
            for (i, &x) in v.iter().enumerate() {
                if let Some(j) = map[i] {
                    out[j] = x;
                }
            }
            out
        };
        Ok(Self::from_parts(
            target.clone(),
            self.components
                .iter()
                .map(|c| {
                    LinearSet::new(
                        move_vec(&c.constant),
                        c.periods.iter().map(|p| move_vec(p)).collect(),
                    )
                })
                .collect(),
        ))
    }

    /// Cheap size reduction: drops redundant periods and components contained
    /// in another component. The result is extensionally equal, not minimal.
    pub fn simplified(self) -> SemilinearSet {
        let space = self.space;
        let comps: Vec<LinearSet> = self
            .components
            .into_iter()
            .map(LinearSet::without_redundant_periods)
            .collect();
        SemilinearSet::from_parts(space, prune_subsumed(merge_shifted(comps)))
    }

    /// Textual rendering: one line per component, constant then periods,
    /// groups separated by `|`. `EMPTY` and `UNIT` for the two degenerate
    /// cases.
    pub fn render(&self) -> String {
        if self.components.is_empty() {
            return "EMPTY".into();
        }
        if self.space.dim() == 0 {
            return "UNIT".into();
        }
        let fmt_vec = |v: &[u64]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        self.components
            .iter()
            .map(|c| {
                let mut groups = vec![fmt_vec(&c.constant)];
                groups.extend(c.periods.iter().map(|p| fmt_vec(p)));
                groups.join(" | ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    fn check_space(&self, other: &CoordSpace) -> Result<()> {
        if self.space != *other {
            return Err(Error::input("coordinate spaces differ"));
        }
        Ok(())
    }
}

impl fmt::Display for SemilinearSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `(c - p + Q*) ∪ (c + P*)` with `p ∈ P` and `P \ {p} ⊆ Q ⊆ P` equals
/// `c - p + P*`.
fn merge_shifted(mut comps: Vec<LinearSet>) -> Vec<LinearSet> {
    let mut changed = true;
    while changed {
        changed = false;
        'outer: for i in 0..comps.len() {
            for j in 0..comps.len() {
                if i == j {
                    continue;
                }
                let (a, b) = (&comps[i], &comps[j]);
                if !le(&b.constant, &a.constant) {
                    continue;
                }
                let p = sub(&a.constant, &b.constant);
                if !a.periods.contains(&p)
                    || !b.periods.iter().all(|q| a.periods.contains(q))
                    || !a.periods.iter().all(|q| *q == p || b.periods.contains(q))
                {
                    continue;
                }
                let merged = LinearSet::new(b.constant.clone(), a.periods.clone());
                let (hi, lo) = (i.max(j), i.min(j));
                comps.swap_remove(hi);
                comps.swap_remove(lo);
                comps.push(merged);
                changed = true;
                break 'outer;
            }
        }
    }
    comps
}

fn prune_subsumed(mut comps: Vec<LinearSet>) -> Vec<LinearSet> {
    // Larger period sets first so that the survivors tend to be the general
    // components.
    comps.sort_by(|a, b| b.periods.len().cmp(&a.periods.len()).then(a.cmp(b)));
    comps.dedup();
    let mut keep: Vec<LinearSet> = Vec::with_capacity(comps.len());
    for c in comps {
        if keep.iter().any(|k| c.included_in(k)) {
            continue;
        }
        keep.retain(|k| !k.included_in(&c));
        keep.push(c);
    }
    keep
}

fn intersect_linear(a: &LinearSet, b: &LinearSet) -> Result<Vec<LinearSet>> {
    let d = a.dim();
    let m1 = a.periods.len();
    let m2 = b.periods.len();
    if m1 + m2 == 0 {
        return Ok(if a.constant == b.constant {
            vec![a.clone()]
        } else {
            Vec::new()
        });
    }
    let mut rows = Vec::with_capacity(d);
    let mut rhs = Vec::with_capacity(d);
    for k in 0..d {
        let row: Vec<i64> = a
            .periods
            .iter()
            .map(|p| p[k] as i64)
            .chain(b.periods.iter().map(|p| -(p[k] as i64)))
            .collect();
        let r = b.constant[k] as i64 - a.constant[k] as i64;
        if row.iter().all(|&x| x == 0) {
            if r != 0 {
                return Ok(Vec::new());
            }
            continue;
        }
        rows.push(row);
        rhs.push(r);
    }
    if rows.is_empty() {
        rows.push(vec![0; m1 + m2]);
        rhs.push(0);
    }
    let sol = hilbert_basis(&rows, &rhs)?;
    let image = |lam: &[u64], with_constant: bool| {
        let mut v = if with_constant {
            a.constant.clone()
        } else {
            vec![0; d]
        };
        for (l, p) in lam.iter().zip(&a.periods) {
            for (x, &y) in v.iter_mut().zip(p) {
                *x += l * y;
            }
        }
        v
    };
    let periods: Vec<Vec<u64>> = sol
        .homogeneous
        .iter()
        .map(|h| image(&h[..m1], false))
        .collect();
    Ok(sol
        .inhomogeneous
        .iter()
        .map(|x| LinearSet::new(image(&x[..m1], true), periods.clone()))
        .collect())
}

fn constrain_linear(c: &LinearSet, rows: &[Vec<i64>]) -> Result<Vec<LinearSet>> {
    let dot = |row: &[i64], v: &[u64]| -> i64 { row.iter().zip(v).map(|(a, &x)| a * x as i64).sum() };
    let coeffs: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| c.periods.iter().map(|p| dot(r, p)).collect())
        .collect();
    let rhs: Vec<i64> = rows.iter().map(|r| -dot(r, &c.constant)).collect();
    let (free, bound): (Vec<usize>, Vec<usize>) =
        (0..c.periods.len()).partition(|&i| coeffs.iter().all(|row| row[i] == 0));
    let free_periods: Vec<Vec<u64>> = free.iter().map(|&i| c.periods[i].clone()).collect();
    if bound.is_empty() {
        return Ok(if rhs.iter().all(|&x| x == 0) {
            vec![c.clone()]
        } else {
            Vec::new()
        });
    }
    let mut sys = Vec::new();
    let mut sys_rhs = Vec::new();
    for (row, &r) in coeffs.iter().zip(&rhs) {
        let reduced: Vec<i64> = bound.iter().map(|&i| row[i]).collect();
        if reduced.iter().all(|&x| x == 0) {
            if r != 0 {
                return Ok(Vec::new());
            }
            continue;
        }
        sys.push(reduced);
        sys_rhs.push(r);
    }
    let sol = hilbert_basis(&sys, &sys_rhs)?;
    let d = c.dim();
    let combine = |lam: &[u64], base: &[u64]| {
        let mut v = base.to_vec();
        for (l, &i) in lam.iter().zip(&bound) {
            for (x, &y) in v.iter_mut().zip(&c.periods[i]) {
                *x += l * y;
            }
        }
        v
    };
    let zero = vec![0; d];
    let mut periods: Vec<Vec<u64>> = sol.homogeneous.iter().map(|h| combine(h, &zero)).collect();
    periods.extend(free_periods);
    Ok(sol
        .inhomogeneous
        .iter()
        .map(|x| LinearSet::new(combine(x, &c.constant), periods.clone()))
        .collect())
}

/// Whether `target` is an N-combination of `periods`.
///
/// Depth-first over the periods in order, trying multiplicities from the
/// largest feasible one down; dead branches are memoized once the period list
/// is long enough for repeated states to matter.
pub fn in_monoid(target: &[u64], periods: &[Vec<u64>]) -> bool {
    if target.iter().all(|&x| x == 0) {
        return true;
    }
    let usable: Vec<&Vec<u64>> = periods
        .iter()
        .filter(|p| le(p, target) && p.iter().any(|&x| x > 0))
        .collect();
    if usable.is_empty() {
        return false;
    }
    // suffix coverage: covered[i][k] = some period at index >= i is nonzero at k
    let d = target.len();
    let mut covered = vec![vec![false; d]; usable.len() + 1];
    for i in (0..usable.len()).rev() {
        for k in 0..d {
            covered[i][k] = covered[i + 1][k] || usable[i][k] > 0;
        }
    }
    let mut failed = HashSet::new();
    let mut rest = target.to_vec();
    monoid_dfs(&mut rest, &usable, 0, &covered, &mut failed)
}

fn monoid_dfs(
    rest: &mut Vec<u64>,
    periods: &[&Vec<u64>],
    i: usize,
    covered: &[Vec<bool>],
    failed: &mut HashSet<(usize, Vec<u64>)>,
) -> bool {
    if rest.iter().all(|&x| x == 0) {
        return true;
    }
    if i == periods.len() {
        return false;
    }
    if rest.iter().zip(&covered[i]).any(|(&x, &c)| x > 0 && !c) {
        return false;
    }
    let memo = periods.len() - i > 4;
    if memo && failed.contains(&(i, rest.clone())) {
        return false;
    }
    let p = periods[i];
    let max = p
        .iter()
        .zip(rest.iter())
        .filter(|(&x, _)| x > 0)
        .map(|(&x, &r)| r / x)
        .min()
        .unwrap_or(0);
    for (x, &y) in rest.iter_mut().zip(p.iter()) {
        *x -= max * y;
    }
    let mut lam = max;
    loop {
        if monoid_dfs(rest, periods, i + 1, covered, failed) {
            return true;
        }
        if lam == 0 {
            break;
        }
        lam -= 1;
        for (x, &y) in rest.iter_mut().zip(p.iter()) {
            *x += y;
        }
    }
    if memo {
        failed.insert((i, rest.clone()));
    }
    false
}

fn support_of(periods: &[Vec<u64>], d: usize) -> Vec<bool> {
    let mut s = vec![false; d];
    for p in periods {
        for (x, &y) in s.iter_mut().zip(p) {
            *x |= y > 0;
        }
    }
    s
}

pub(crate) fn le(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub(crate) fn add(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

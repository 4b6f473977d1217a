//! Least solutions of equation systems over semilinear sets.
//!
//! Sets form a commutative idempotent semiring under union and Minkowski sum.
//! A system `X = f(X)` is split into strongly connected components, solved in
//! dependency order; inside a component Newton's method is applied, each step
//! solving the linearized system `Y = f(ν) ∪ Df_ν(Y)` by elimination. In this
//! semiring the Newton sequence reaches the least fixpoint after at most as
//! many steps as there are variables; iteration stops earlier once `f(ν) ⊆ ν`
//! is certified.

use std::collections::BTreeMap;

use crate::semilinear::{CoordSpace, SemilinearSet};

#[derive(Clone, Debug)]
pub enum Expr {
    Const(SemilinearSet),
    Var(usize),
    /// Minkowski sum of the operands (`{0}` when empty).
    Sum(Vec<Expr>),
    /// Union of the operands (empty set when empty).
    Union(Vec<Expr>),
    Star(Box<Expr>),
}

impl Expr {
    fn vars(&self, out: &mut Vec<usize>) {
        match self {
            Expr::Const(_) => {}
            Expr::Var(v) => out.push(*v),
            Expr::Sum(es) | Expr::Union(es) => es.iter().for_each(|e| e.vars(out)),
            Expr::Star(e) => e.vars(out),
        }
    }
}

/// `X_i = eqs[i]` for every variable `i`.
#[derive(Clone, Debug)]
pub struct System {
    pub space: CoordSpace,
    pub eqs: Vec<Expr>,
}

pub(crate) type Coeffs = BTreeMap<usize, SemilinearSet>;

struct Ctx<'a> {
    space: &'a CoordSpace,
    /// Current values; solved variables outside the component are final.
    values: &'a [SemilinearSet],
    /// Position of a variable inside the component being solved.
    local: &'a [Option<usize>],
}

impl Ctx<'_> {
    fn zero(&self) -> SemilinearSet {
        SemilinearSet::zero(self.space.clone())
    }

    fn empty(&self) -> SemilinearSet {
        SemilinearSet::empty(self.space.clone())
    }

    fn eval(&self, e: &Expr) -> SemilinearSet {
        match e {
            Expr::Const(c) => c.clone(),
            Expr::Var(v) => self.values[*v].clone(),
            Expr::Sum(es) => {
                let mut acc = self.zero();
                for x in es {
                    if acc.is_empty() {
                        break;
                    }
                    acc = acc.sum(&self.eval(x)).expect("same space").simplified();
                }
                acc
            }
            Expr::Union(es) => {
                let mut acc = self.empty();
                for x in es {
                    acc = acc.union(&self.eval(x)).expect("same space");
                }
                acc.simplified()
            }
            Expr::Star(x) => self.eval(x).star(),
        }
    }

    /// Value at the current point together with the differential, as
    /// coefficients of the component's local variables.
    fn eval_diff(&self, e: &Expr) -> (SemilinearSet, Coeffs) {
        match e {
            Expr::Const(c) => (c.clone(), Coeffs::new()),
            Expr::Var(v) => {
                let mut d = Coeffs::new();
                if let Some(l) = self.local[*v] {
                    d.insert(l, self.zero());
                }
                (self.values[*v].clone(), d)
            }
            Expr::Union(es) => {
                let mut val = self.empty();
                let mut d = Coeffs::new();
                for x in es {
                    let (v, dx) = self.eval_diff(x);
                    val = val.union(&v).expect("same space");
                    merge(&mut d, dx);
                }
                (val.simplified(), d)
            }
            Expr::Star(x) => {
                let (v, dx) = self.eval_diff(x);
                let s = v.star();
                let d = dx
                    .into_iter()
                    .map(|(u, b)| (u, b.sum(&s).expect("same space").simplified()))
                    .collect();
                (s, d)
            }
            Expr::Sum(es) => {
                let parts: Vec<(SemilinearSet, Coeffs)> =
                    es.iter().map(|x| self.eval_diff(x)).collect();
                let n = parts.len();
                // prefix[i] = v_0 + … + v_{i-1}; suffix[i] = v_i + … + v_{n-1}
                let mut prefix = vec![self.zero()];
                for (v, _) in &parts {
                    let next = prefix.last().unwrap().sum(v).expect("same space").simplified();
                    prefix.push(next);
                }
                let mut suffix = vec![self.zero(); n + 1];
                for i in (0..n).rev() {
                    suffix[i] = parts[i].0.sum(&suffix[i + 1]).expect("same space").simplified();
                }
                let mut d = Coeffs::new();
                for (i, (_, dx)) in parts.iter().enumerate() {
                    if dx.is_empty() {
                        continue;
                    }
                    let others = prefix[i].sum(&suffix[i + 1]).expect("same space").simplified();
                    if others.is_empty() {
                        continue;
                    }
                    let scaled: Coeffs = dx
                        .iter()
                        .map(|(u, b)| (*u, b.sum(&others).expect("same space").simplified()))
                        .filter(|(_, b)| !b.is_empty())
                        .collect();
                    merge(&mut d, scaled);
                }
                (prefix.pop().unwrap(), d)
            }
        }
    }
}

fn merge(into: &mut Coeffs, from: Coeffs) {
    for (u, b) in from {
        match into.remove(&u) {
            Some(old) => {
                into.insert(u, old.union(&b).expect("same space").simplified());
            }
            None => {
                into.insert(u, b);
            }
        }
    }
}

/// Least solution, one set per variable.
pub fn least_solution(sys: &System) -> Vec<SemilinearSet> {
    let n = sys.eqs.len();
    let deps: Vec<Vec<usize>> = sys
        .eqs
        .iter()
        .map(|e| {
            let mut v = Vec::new();
            e.vars(&mut v);
            v.sort_unstable();
            v.dedup();
            v
        })
        .collect();
    let mut values: Vec<SemilinearSet> = vec![SemilinearSet::empty(sys.space.clone()); n];
    let mut local = vec![None; n];
    for comp in tarjan(&deps) {
        for (i, &v) in comp.iter().enumerate() {
            local[v] = Some(i);
        }
        let recursive = comp.len() > 1 || deps[comp[0]].contains(&comp[0]);
        if !recursive {
            let ctx = Ctx {
                space: &sys.space,
                values: &values,
                local: &local,
            };
            let v = ctx.eval(&sys.eqs[comp[0]]);
            values[comp[0]] = v;
        } else {
            solve_component(sys, &comp, &mut values, &local);
        }
        for &v in &comp {
            local[v] = None;
        }
    }
    values
}

fn solve_component(
    sys: &System,
    comp: &[usize],
    values: &mut [SemilinearSet],
    local: &[Option<usize>],
) {
    // values of comp are empty here, so this evaluates f at the bottom
    let start: Vec<SemilinearSet> = {
        let ctx = Ctx {
            space: &sys.space,
            values,
            local,
        };
        comp.iter().map(|&v| ctx.eval(&sys.eqs[v])).collect()
    };
    for (&v, s) in comp.iter().zip(start) {
        values[v] = s;
    }
    for _ in 0..=comp.len() {
        let (fv, coeffs): (Vec<SemilinearSet>, Vec<Coeffs>) = {
            let ctx = Ctx {
                space: &sys.space,
                values,
                local,
            };
            comp.iter().map(|&v| ctx.eval_diff(&sys.eqs[v])).unzip()
        };
        let stable = comp
            .iter()
            .zip(&fv)
            .all(|(&v, f)| included(f, &values[v]));
        if stable {
            return;
        }
        let next = solve_linear(&sys.space, fv, coeffs);
        for (&v, s) in comp.iter().zip(next) {
            values[v] = s;
        }
    }
}

/// Sufficient inclusion test: every component of `a` lies in one of `b`.
pub(crate) fn included(a: &SemilinearSet, b: &SemilinearSet) -> bool {
    a.components()
        .iter()
        .all(|c| b.components().iter().any(|d| c.included_in(d)))
}

/// Least solution of `Y_v = a_v ∪ ⋃_u (B_vu + Y_u)`.
pub(crate) fn solve_linear(space: &CoordSpace, mut a: Vec<SemilinearSet>, mut b: Vec<Coeffs>) -> Vec<SemilinearSet> {
    let m = a.len();
    let add = |x: &SemilinearSet, y: &SemilinearSet| x.sum(y).expect("same space").simplified();
    let join = |x: &SemilinearSet, y: &SemilinearSet| x.union(y).expect("same space").simplified();
    for k in 0..m {
        let s = b[k]
            .remove(&k)
            .map(|l| l.star())
            .unwrap_or_else(|| SemilinearSet::zero(space.clone()));
        a[k] = add(&s, &a[k]);
        let row: Coeffs = std::mem::take(&mut b[k])
            .into_iter()
            .map(|(u, c)| (u, add(&s, &c)))
            .filter(|(_, c)| !c.is_empty())
            .collect();
        b[k] = row.clone();
        for v in 0..m {
            if v == k {
                continue;
            }
            let Some(c) = b[v].remove(&k) else { continue };
            a[v] = join(&a[v], &add(&c, &a[k]));
            for (u, bku) in &row {
                let t = add(&c, bku);
                if t.is_empty() {
                    continue;
                }
                let merged = match b[v].remove(u) {
                    Some(old) => join(&old, &t),
                    None => t,
                };
                b[v].insert(*u, merged);
            }
        }
    }
    // row k now mentions only variables above k
    let mut sol: Vec<SemilinearSet> = vec![SemilinearSet::empty(space.clone()); m];
    for k in (0..m).rev() {
        let mut acc = a[k].clone();
        for (u, c) in &b[k] {
            acc = join(&acc, &add(c, &sol[*u]));
        }
        sol[k] = acc;
    }
    sol
}

/// Strongly connected components, dependencies before dependents.
fn tarjan(deps: &[Vec<usize>]) -> Vec<Vec<usize>> {
    struct St<'a> {
        deps: &'a [Vec<usize>],
        index: Vec<Option<usize>>,
        low: Vec<usize>,
        on: Vec<bool>,
        stack: Vec<usize>,
        next: usize,
        out: Vec<Vec<usize>>,
    }
    fn visit(s: &mut St, v: usize) {
        // iterative to survive long dependency chains
        let mut call: Vec<(usize, usize)> = vec![(v, 0)];
        s.index[v] = Some(s.next);
        s.low[v] = s.next;
        s.next += 1;
        s.stack.push(v);
        s.on[v] = true;
        while let Some(&(x, i)) = call.last() {
            if i < s.deps[x].len() {
                let y = s.deps[x][i];
                call.last_mut().unwrap().1 += 1;
                match s.index[y] {
                    None => {
                        s.index[y] = Some(s.next);
                        s.low[y] = s.next;
                        s.next += 1;
                        s.stack.push(y);
                        s.on[y] = true;
                        call.push((y, 0));
                    }
                    Some(iy) if s.on[y] => s.low[x] = s.low[x].min(iy),
                    _ => {}
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    s.low[parent] = s.low[parent].min(s.low[x]);
                }
                if Some(s.low[x]) == s.index[x] {
                    let mut comp = Vec::new();
                    loop {
                        let w = s.stack.pop().unwrap();
                        s.on[w] = false;
                        comp.push(w);
                        if w == x {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    s.out.push(comp);
                }
            }
        }
    }
    let n = deps.len();
    let mut s = St {
        deps,
        index: vec![None; n],
        low: vec![0; n],
        on: vec![false; n],
        stack: Vec::new(),
        next: 0,
        out: Vec::new(),
    };
    for v in 0..n {
        if s.index[v].is_none() {
            visit(&mut s, v);
        }
    }
    s.out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::letter::Letter;
    use crate::semilinear::{LinearSet, VectorN};

    fn space() -> CoordSpace {
        CoordSpace::canonical([Letter::gen("a"), Letter::gen("b")])
    }

    fn point(a: u64, b: u64) -> Expr {
        Expr::Const(SemilinearSet::singleton(&VectorN::new(space(), vec![a, b]).unwrap()))
    }

    #[test]
    fn balanced_parentheses() {
        // X = a X b ∪ ε
        let sys = System {
            space: space(),
            eqs: vec![Expr::Union(vec![
                Expr::Sum(vec![point(1, 0), Expr::Var(0), point(0, 1)]),
                point(0, 0),
            ])],
        };
        let sol = least_solution(&sys);
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(sol[0].contains(&[a, b]), a == b, "{a} {b}");
            }
        }
    }

    #[test]
    fn quadratic_equation() {
        // X = X X ∪ a: every positive multiple of a
        let sys = System {
            space: space(),
            eqs: vec![Expr::Union(vec![
                Expr::Sum(vec![Expr::Var(0), Expr::Var(0)]),
                point(1, 0),
            ])],
        };
        let sol = least_solution(&sys);
        for a in 0..10 {
            assert_eq!(sol[0].contains(&[a, 0]), a >= 1);
            assert!(!sol[0].contains(&[a, 1]));
        }
    }

    #[test]
    fn mutual_recursion_and_chains() {
        // X0 = a X1 ∪ ε, X1 = b X0, X2 = X0 X0*, X3 = X3 (unproductive)
        let sys = System {
            space: space(),
            eqs: vec![
                Expr::Union(vec![Expr::Sum(vec![point(1, 0), Expr::Var(1)]), point(0, 0)]),
                Expr::Sum(vec![point(0, 1), Expr::Var(0)]),
                Expr::Sum(vec![Expr::Var(0), Expr::Star(Box::new(Expr::Var(0)))]),
                Expr::Var(3),
            ],
        };
        let sol = least_solution(&sys);
        assert!(sol[0].contains(&[3, 3]) && !sol[0].contains(&[3, 2]));
        assert!(sol[1].contains(&[2, 3]) && !sol[1].contains(&[2, 2]));
        assert!(sol[2].contains(&[5, 5]));
        assert!(sol[3].is_empty());
    }

    #[test]
    fn linear_solver_handles_stars() {
        let sp = space();
        let lin = |c: Vec<u64>, ps: Vec<Vec<u64>>| {
            SemilinearSet::new(sp.clone(), vec![LinearSet::new(c, ps)]).unwrap()
        };
        // Y0 = (1,0) ∪ ((0,1) + Y0) ∪ ((0,0) + Y1); Y1 = (2,2)
        let a = vec![lin(vec![1, 0], vec![]), lin(vec![2, 2], vec![])];
        let mut b = vec![Coeffs::new(), Coeffs::new()];
        b[0].insert(0, lin(vec![0, 1], vec![]));
        b[0].insert(1, lin(vec![0, 0], vec![]));
        let sol = solve_linear(&sp, a, b);
        assert!(sol[0].contains(&[1, 4]) && sol[0].contains(&[2, 5]));
        assert!(!sol[0].contains(&[0, 4]));
        assert_eq!(sol[1].render(), "2 2");
    }
}

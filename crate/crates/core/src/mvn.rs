//! MV/MVₙ/Łₙᶜ-algebras presented as subalgebras of `n̄^X`, the detection
//! terms `Tᵣ`/`Sᵣ`, n̄-filters and spectra, and n̄-fuzzy Boolean systems.
//!
//! Every concrete algebra is a function algebra over the chain `n̄`:
//! elements are maps `X → n̄` stored as chain-index vectors, operations act
//! pointwise by index arithmetic, and the chain itself is the case of a
//! one-point `X`. Abstract operation tables are accepted for axiom checking
//! only.

use crate::error::Error;
use crate::fuzzyset::{Carrier, FuzzySubset};
use crate::report::Report;
use crate::space::{Flavor, FuzzyTopSpace};
use crate::truth::{TruthValue, ValueChain};
use serde::{Deserialize, Serialize};

/// Pointwise index arithmetic for the standard operations on `n̄`, where an
/// element `k` stands for `k/(n-1)`.
#[derive(Debug, Clone, Copy)]
pub struct ChainOps {
    top: usize, // = n - 1
}

impl ChainOps {
    pub fn new(n: usize) -> Self {
        ChainOps { top: n - 1 }
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        (x + y).min(self.top)
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        (x + y).saturating_sub(self.top)
    }

    pub fn neg(&self, x: usize) -> usize {
        self.top - x
    }

    pub fn arrow(&self, x: usize, y: usize) -> usize {
        (self.top - x + y).min(self.top)
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        x.min(y)
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        x.max(y)
    }
}

/// How an element of a function algebra first arose during closure; a hom
/// into `n̄` is determined by the generator values and extends along this.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    Constant(usize),
    Generator(usize),
    Add(usize, usize),
    Mul(usize, usize),
    Neg(usize),
    Arrow(usize, usize),
    Meet(usize, usize),
    Join(usize, usize),
}

/// An Łₙᶜ-algebra of functions `X → n̄`, closed under all operations and
/// containing every constant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LnAlgebra {
    chain: ValueChain,
    points: Vec<String>,
    /// Chain-index vectors, one entry per point of `X`.
    elements: Vec<Vec<usize>>,
    provenance: Vec<Provenance>,
    /// Ids of the declared generators.
    generators: Vec<usize>,
}

impl LnAlgebra {
    /// The chain `n̄` itself: the function algebra over a one-point set.
    pub fn chain_algebra(n: usize) -> Result<Self, Error> {
        LnAlgebra::function_algebra(n, &["*".to_string()], &[])
    }

    /// The subalgebra of `n̄^X` generated by the given maps and all
    /// constants, closed by fixed-point iteration.
    pub fn function_algebra(
        n: usize,
        points: &[String],
        generators: &[Vec<usize>],
    ) -> Result<Self, Error> {
        let chain = ValueChain::new(n)?;
        if points.is_empty() {
            return Err(Error::precondition("function algebra needs a nonempty point set"));
        }
        let ops = ChainOps::new(n);
        let width = points.len();
        let mut elements: Vec<Vec<usize>> = Vec::new();
        let mut provenance: Vec<Provenance> = Vec::new();
        let push = |elements: &mut Vec<Vec<usize>>,
                        provenance: &mut Vec<Provenance>,
                        e: Vec<usize>,
                        p: Provenance|
         -> usize {
            match elements.iter().position(|x| *x == e) {
                Some(i) => i,
                None => {
                    elements.push(e);
                    provenance.push(p);
                    elements.len() - 1
                }
            }
        };
        for r in 0..n {
            push(&mut elements, &mut provenance, vec![r; width], Provenance::Constant(r));
        }
        let mut generator_ids = Vec::new();
        for (k, g) in generators.iter().enumerate() {
            if g.len() != width || g.iter().any(|&v| v >= n) {
                return Err(Error::structural("generator map is not a function X → n̄"));
            }
            generator_ids.push(push(
                &mut elements,
                &mut provenance,
                g.clone(),
                Provenance::Generator(k),
            ));
        }
        // closure under the binary operations and negation
        let mut frontier = 0;
        while frontier < elements.len() {
            let upto = elements.len();
            for i in 0..upto {
                for j in 0..upto {
                    if i.max(j) < frontier {
                        continue; // pair already processed
                    }
                    let pairs: [(Vec<usize>, Provenance); 5] = [
                        (
                            (0..width).map(|p| ops.add(elements[i][p], elements[j][p])).collect(),
                            Provenance::Add(i, j),
                        ),
                        (
                            (0..width).map(|p| ops.mul(elements[i][p], elements[j][p])).collect(),
                            Provenance::Mul(i, j),
                        ),
                        (
                            (0..width)
                                .map(|p| ops.arrow(elements[i][p], elements[j][p]))
                                .collect(),
                            Provenance::Arrow(i, j),
                        ),
                        (
                            (0..width).map(|p| ops.meet(elements[i][p], elements[j][p])).collect(),
                            Provenance::Meet(i, j),
                        ),
                        (
                            (0..width).map(|p| ops.join(elements[i][p], elements[j][p])).collect(),
                            Provenance::Join(i, j),
                        ),
                    ];
                    for (e, p) in pairs {
                        push(&mut elements, &mut provenance, e, p);
                    }
                }
                let neg = (0..width).map(|p| ops.neg(elements[i][p])).collect();
                push(&mut elements, &mut provenance, neg, Provenance::Neg(i));
            }
            frontier = upto;
        }
        Ok(LnAlgebra {
            chain,
            points: points.to_vec(),
            elements,
            provenance,
            generators: generator_ids,
        })
    }

    /// Builds from an explicit closed element list (e.g. `Cont(X, τ)`); the
    /// generators are recovered greedily and closure is verified.
    pub fn from_elements(
        n: usize,
        points: &[String],
        elements: &[Vec<usize>],
    ) -> Result<Self, Error> {
        let mut generators: Vec<Vec<usize>> = Vec::new();
        loop {
            let alg = LnAlgebra::function_algebra(n, points, &generators)?;
            match elements.iter().find(|e| !alg.elements.contains(e)) {
                Some(missing) => generators.push((*missing).clone()),
                None => {
                    if alg.elements.iter().all(|e| elements.contains(e)) {
                        return Ok(alg);
                    }
                    return Err(Error::structural(
                        "element list is not closed under the operations",
                    ));
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.chain.n()
    }

    pub fn chain(&self) -> &ValueChain {
        &self.chain
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Vec<usize>] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn ops(&self) -> ChainOps {
        ChainOps::new(self.n())
    }

    /// Id of the constant `r` (chain index).
    pub fn constant(&self, r: usize) -> usize {
        self.elements
            .iter()
            .position(|e| e.iter().all(|&v| v == r))
            .expect("constants are always present")
    }

    pub fn zero(&self) -> usize {
        self.constant(0)
    }

    pub fn one(&self) -> usize {
        self.constant(self.n() - 1)
    }

    fn index_of(&self, e: &[usize]) -> Result<usize, Error> {
        self.elements
            .iter()
            .position(|x| x == e)
            .ok_or_else(|| Error::structural("operation left the declared subalgebra"))
    }

    fn lift2(&self, a: usize, b: usize, f: impl Fn(usize, usize) -> usize) -> usize {
        let e: Vec<usize> = self.elements[a]
            .iter()
            .zip(&self.elements[b])
            .map(|(&x, &y)| f(x, y))
            .collect();
        self.index_of(&e).expect("algebra is closed under its own operations")
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let ops = self.ops();
        self.lift2(a, b, |x, y| ops.add(x, y))
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let ops = self.ops();
        self.lift2(a, b, |x, y| ops.mul(x, y))
    }

    pub fn arrow(&self, a: usize, b: usize) -> usize {
        let ops = self.ops();
        self.lift2(a, b, |x, y| ops.arrow(x, y))
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        let ops = self.ops();
        self.lift2(a, b, |x, y| ops.meet(x, y))
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        let ops = self.ops();
        self.lift2(a, b, |x, y| ops.join(x, y))
    }

    pub fn neg(&self, a: usize) -> usize {
        let ops = self.ops();
        let e: Vec<usize> = self.elements[a].iter().map(|&x| ops.neg(x)).collect();
        self.index_of(&e).expect("algebra is closed under its own operations")
    }

    /// `m·x` per the iterated sum.
    pub fn scalar(&self, m: usize, a: usize) -> usize {
        let mut acc = self.zero();
        for _ in 0..m {
            acc = self.add(acc, a);
        }
        acc
    }

    /// `x^m` per the iterated product.
    pub fn power(&self, a: usize, m: usize) -> usize {
        let mut acc = self.one();
        for _ in 0..m {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// `a ≤ b` in the lattice order.
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.elements[a].iter().zip(&self.elements[b]).all(|(&x, &y)| x <= y)
    }

    /// Truth value of the element at a point.
    pub fn value(&self, a: usize, point: usize) -> TruthValue {
        self.chain.elements()[self.elements[a][point]]
    }

    /// Semantic `T_r`: `T_r(a)(x) = 1` if `a(x) = r`, else `0`. The result
    /// is looked up in the algebra; the lookup cannot fail on a properly
    /// closed algebra, since `T_r` is realized by a term.
    pub fn t_term(&self, r: usize, a: usize) -> Result<usize, Error> {
        let top = self.n() - 1;
        let e: Vec<usize> =
            self.elements[a].iter().map(|&v| if v == r { top } else { 0 }).collect();
        self.index_of(&e)
    }

    /// Semantic `S_r`: `S_r(a)(x) = r` if `a(x) = 1`, else `0`.
    pub fn s_term(&self, r: usize, a: usize) -> Result<usize, Error> {
        let top = self.n() - 1;
        let e: Vec<usize> =
            self.elements[a].iter().map(|&v| if v == top { r } else { 0 }).collect();
        self.index_of(&e)
    }

    /// All Łₙᶜ-homs `A → n̄`, found by assigning chain values to the
    /// generators, extending along provenance, and keeping the assignments
    /// that respect every operation table. Independent of the prime-filter
    /// route.
    pub fn enumerate_homs(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let g = self.generators.len();
        let mut out = Vec::new();
        let total = (n as u64).pow(g as u32);
        let ops = self.ops();
        for code in 0..total {
            let mut c = code;
            let mut gen_vals = Vec::with_capacity(g);
            for _ in 0..g {
                gen_vals.push((c % n as u64) as usize);
                c /= n as u64;
            }
            let mut v = vec![usize::MAX; self.len()];
            for (i, p) in self.provenance.iter().enumerate() {
                v[i] = match *p {
                    Provenance::Constant(r) => r,
                    Provenance::Generator(k) => gen_vals[k],
                    Provenance::Add(a, b) => ops.add(v[a], v[b]),
                    Provenance::Mul(a, b) => ops.mul(v[a], v[b]),
                    Provenance::Neg(a) => ops.neg(v[a]),
                    Provenance::Arrow(a, b) => ops.arrow(v[a], v[b]),
                    Provenance::Meet(a, b) => ops.meet(v[a], v[b]),
                    Provenance::Join(a, b) => ops.join(v[a], v[b]),
                };
            }
            let consistent = (0..self.len()).all(|a| {
                (0..self.len()).all(|b| {
                    v[self.add(a, b)] == ops.add(v[a], v[b])
                        && v[self.mul(a, b)] == ops.mul(v[a], v[b])
                        && v[self.meet(a, b)] == ops.meet(v[a], v[b])
                        && v[self.join(a, b)] == ops.join(v[a], v[b])
                        && v[self.arrow(a, b)] == ops.arrow(v[a], v[b])
                }) && v[self.neg(a)] == ops.neg(v[a])
            });
            if consistent && !out.contains(&v) {
                out.push(v);
            }
        }
        out.sort();
        out
    }
}

/// Raw operation tables for axiom checking of abstract candidates.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawTables {
    pub n: usize,
    pub size: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub neg: Vec<usize>,
    pub arrow: Vec<Vec<usize>>,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    /// Carrier id of each chain constant, ascending.
    pub constants: Vec<usize>,
}

impl RawTables {
    pub fn of(algebra: &LnAlgebra) -> RawTables {
        let size = algebra.len();
        RawTables {
            n: algebra.n(),
            size,
            add: (0..size).map(|a| (0..size).map(|b| algebra.add(a, b)).collect()).collect(),
            mul: (0..size).map(|a| (0..size).map(|b| algebra.mul(a, b)).collect()).collect(),
            neg: (0..size).map(|a| algebra.neg(a)).collect(),
            arrow: (0..size).map(|a| (0..size).map(|b| algebra.arrow(a, b)).collect()).collect(),
            meet: (0..size).map(|a| (0..size).map(|b| algebra.meet(a, b)).collect()).collect(),
            join: (0..size).map(|a| (0..size).map(|b| algebra.join(a, b)).collect()).collect(),
            constants: (0..algebra.n()).map(|r| algebra.constant(r)).collect(),
        }
    }

    fn scalar(&self, m: usize, x: usize) -> usize {
        let mut acc = self.constants[0];
        for _ in 0..m {
            acc = self.add[acc][x];
        }
        acc
    }

    fn power(&self, x: usize, m: usize) -> usize {
        let mut acc = self.constants[self.n - 1];
        for _ in 0..m {
            acc = self.mul[acc][x];
        }
        acc
    }
}

/// Exhaustive check of the MV, MVₙ and Łₙᶜ axioms over the carrier.
pub fn check_lnc(tables: &RawTables) -> Report {
    let mut report = Report::new("Łₙᶜ-algebra");
    let t = tables;
    let size = t.size;
    let zero = t.constants[0];
    let one = t.constants[t.n - 1];

    let find2 =
        |law: &str, pred: &dyn Fn(usize, usize) -> bool, report: &mut Report| {
            let mut bad = None;
            for x in 0..size {
                for y in 0..size {
                    if !pred(x, y) && bad.is_none() {
                        bad = Some((x, y));
                    }
                }
            }
            report.record(law, bad.is_none(), || {
                let (x, y) = bad.unwrap();
                format!("at elements ({x}, {y})")
            });
        };

    // commutative monoid (A, ⊕, 0)
    find2("⊕ commutative", &|x, y| t.add[x][y] == t.add[y][x], &mut report);
    let mut bad_assoc = None;
    'assoc: for x in 0..size {
        for y in 0..size {
            for z in 0..size {
                if t.add[t.add[x][y]][z] != t.add[x][t.add[y][z]] {
                    bad_assoc = Some((x, y, z));
                    break 'assoc;
                }
            }
        }
    }
    report.record("⊕ associative", bad_assoc.is_none(), || {
        let (x, y, z) = bad_assoc.unwrap();
        format!("at elements ({x}, {y}, {z})")
    });
    report.record("0 is a unit for ⊕", (0..size).all(|x| t.add[x][zero] == x), || {
        let x = (0..size).find(|&x| t.add[x][zero] != x).unwrap();
        format!("at element {x}")
    });

    // Mangani axioms
    report.record("axiom 1: x⊕1 = 1", (0..size).all(|x| t.add[x][one] == one), || {
        let x = (0..size).find(|&x| t.add[x][one] != one).unwrap();
        format!("at element {x}")
    });
    report.record("axiom 2: (x^⊥)^⊥ = x", (0..size).all(|x| t.neg[t.neg[x]] == x), || {
        let x = (0..size).find(|&x| t.neg[t.neg[x]] != x).unwrap();
        format!("at element {x}")
    });
    report.record("axiom 3: 0^⊥ = 1", t.neg[zero] == one, || "0^⊥ ≠ 1".into());
    find2(
        "axiom 4: (x^⊥⊕y)^⊥⊕y = (y^⊥⊕x)^⊥⊕x",
        &|x, y| t.add[t.neg[t.add[t.neg[x]][y]]][y] == t.add[t.neg[t.add[t.neg[y]][x]]][x],
        &mut report,
    );
    find2(
        "axiom 5: x*y = (x^⊥⊕y^⊥)^⊥",
        &|x, y| t.mul[x][y] == t.neg[t.add[t.neg[x]][t.neg[y]]],
        &mut report,
    );

    // MVₙ axioms
    let m = t.n - 1;
    report.record(
        "MVₙ axiom: (n-1)x ⊕ x = (n-1)x",
        (0..size).all(|x| t.add[t.scalar(m, x)][x] == t.scalar(m, x)),
        || {
            let x = (0..size).find(|&x| t.add[t.scalar(m, x)][x] != t.scalar(m, x)).unwrap();
            format!("at element {x}")
        },
    );
    report.record(
        "MVₙ axiom: x^(n-1) * x = x^(n-1)",
        (0..size).all(|x| t.mul[t.power(x, m)][x] == t.power(x, m)),
        || {
            let x = (0..size).find(|&x| t.mul[t.power(x, m)][x] != t.power(x, m)).unwrap();
            format!("at element {x}")
        },
    );
    if t.n >= 4 {
        for j in 2..m {
            if m % j == 0 {
                continue;
            }
            let ok_j = (0..size).all(|x| {
                let lhs = t.power(t.mul[t.scalar(j, x)][t.neg[t.add[t.neg[x]][t.scalar(j - 1, x)]]], m);
                lhs == zero
            });
            report.record(format!("MVₙ axiom 2 at j = {j}"), ok_j, || "failed".into());
            let ok_j2 = (0..size).all(|x| {
                let inner = t.add[t.power(x, j)][t.mul[t.neg[x]][t.neg[t.power(x, j - 1)]]];
                t.scalar(m, inner) == one
            });
            report.record(format!("MVₙ axiom 2' at j = {j}"), ok_j2, || "failed".into());
        }
    }

    // derived-operation consistency
    find2("x → y = x^⊥ ⊕ y", &|x, y| t.arrow[x][y] == t.add[t.neg[x]][y], &mut report);
    find2(
        "a∨b = (a*b^⊥)⊕b",
        &|x, y| t.join[x][y] == t.add[t.mul[x][t.neg[y]]][y],
        &mut report,
    );
    find2(
        "a∧b = (a⊕b^⊥)*b",
        &|x, y| t.meet[x][y] == t.mul[t.add[x][t.neg[y]]][y],
        &mut report,
    );

    // the chain embeds as constants
    let distinct = (0..t.n).all(|r| (0..t.n).all(|s| r == s || t.constants[r] != t.constants[s]));
    report.record("constants are distinct", distinct, || "n̄ collapses".into());
    let ops = ChainOps::new(t.n);
    let mut bad_embed = None;
    for r in 0..t.n {
        for s in 0..t.n {
            let ok = t.add[t.constants[r]][t.constants[s]] == t.constants[ops.add(r, s)]
                && t.mul[t.constants[r]][t.constants[s]] == t.constants[ops.mul(r, s)]
                && t.neg[t.constants[r]] == t.constants[ops.neg(r)];
            if !ok && bad_embed.is_none() {
                bad_embed = Some((r, s));
            }
        }
    }
    report.record("n̄ → A is a homomorphism", bad_embed.is_none(), || {
        let (r, s) = bad_embed.unwrap();
        format!("at constants ({r}, {s})")
    });
    report
}

/// An n̄-filter presented by its sorted member ids.
pub type NFilter = Vec<usize>;

fn upset_of(algebra: &LnAlgebra, minimals: &[usize]) -> NFilter {
    (0..algebra.len())
        .filter(|&x| minimals.iter().any(|&g| algebra.le(g, x)))
        .collect()
}

fn star_closed(algebra: &LnAlgebra, members: &[usize]) -> bool {
    members
        .iter()
        .all(|&a| members.iter().all(|&b| members.contains(&algebra.mul(a, b))))
}

/// Every n̄-filter: nonempty upward-closed `*`-closed subsets, enumerated
/// through antichains of minimal elements to avoid the full `2^|A|` sweep.
pub fn enumerate_nfilters(algebra: &LnAlgebra) -> Vec<NFilter> {
    let n = algebra.len();
    let mut filters = Vec::new();
    let mut antichain: Vec<usize> = Vec::new();

    fn go(
        algebra: &LnAlgebra,
        start: usize,
        antichain: &mut Vec<usize>,
        filters: &mut Vec<NFilter>,
    ) {
        if !antichain.is_empty() {
            let upset = upset_of(algebra, antichain);
            if star_closed(algebra, &upset) {
                filters.push(upset);
            }
        }
        for e in start..algebra.len() {
            let incomparable =
                antichain.iter().all(|&a| !algebra.le(a, e) && !algebra.le(e, a));
            if incomparable {
                antichain.push(e);
                go(algebra, e + 1, antichain, filters);
                antichain.pop();
            }
        }
    }

    go(algebra, 0, &mut antichain, &mut filters);
    let _ = n;
    filters.sort();
    filters
}

pub fn is_proper(algebra: &LnAlgebra, filter: &NFilter) -> bool {
    filter.len() != algebra.len()
}

/// Prime: proper, and `a∨b ∈ P` forces `a ∈ P` or `b ∈ P`.
pub fn is_prime(algebra: &LnAlgebra, filter: &NFilter) -> bool {
    if !is_proper(algebra, filter) {
        return false;
    }
    (0..algebra.len()).all(|a| {
        (0..algebra.len()).all(|b| {
            !filter.contains(&algebra.join(a, b)) || filter.contains(&a) || filter.contains(&b)
        })
    })
}

pub fn enumerate_prime_filters(algebra: &LnAlgebra) -> Vec<NFilter> {
    enumerate_nfilters(algebra)
        .into_iter()
        .filter(|f| is_prime(algebra, f))
        .collect()
}

/// A prime filter containing `F` and avoiding `b`; exists whenever `b ∉ F`.
pub fn extend_filter(algebra: &LnAlgebra, f: &NFilter, b: usize) -> Result<NFilter, Error> {
    if f.contains(&b) {
        return Err(Error::precondition("b already belongs to the filter"));
    }
    enumerate_prime_filters(algebra)
        .into_iter()
        .find(|p| f.iter().all(|a| p.contains(a)) && !p.contains(&b))
        .ok_or_else(|| Error::structural("no prime filter extends F avoiding b"))
}

/// Does a subset have the finite intersection property w.r.t. `*`?
pub fn has_fip(algebra: &LnAlgebra, xs: &[usize]) -> bool {
    if xs.len() > 20 {
        // products only shrink: the full product decides every subset
        let total = xs.iter().copied().fold(algebra.one(), |a, b| algebra.mul(a, b));
        return total != algebra.zero();
    }
    (1u32..(1 << xs.len())).all(|mask| {
        let prod = (0..xs.len())
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| xs[i])
            .fold(algebra.one(), |a, b| algebra.mul(a, b));
        prod != algebra.zero()
    })
}

/// A prime filter containing a set with the finite intersection property.
pub fn prime_from_fip(algebra: &LnAlgebra, xs: &[usize]) -> Result<NFilter, Error> {
    if !has_fip(algebra, xs) {
        return Err(Error::precondition("the set lacks the finite intersection property"));
    }
    enumerate_prime_filters(algebra)
        .into_iter()
        .find(|p| xs.iter().all(|a| p.contains(a)))
        .ok_or_else(|| Error::structural("no prime filter contains the set"))
}

/// `v_P(a) = r ⇔ T_r(a) ∈ P`; needs the algebra closed under every `T_r`.
pub fn hom_from_prime(algebra: &LnAlgebra, p: &NFilter) -> Result<Vec<usize>, Error> {
    (0..algebra.len())
        .map(|a| {
            let rs: Vec<usize> = (0..algebra.n())
                .filter(|&r| {
                    algebra.t_term(r, a).map(|t| p.contains(&t)).unwrap_or(false)
                })
                .collect();
            match rs.as_slice() {
                [r] => Ok(*r),
                _ => Err(Error::structural(format!(
                    "prime filter assigns {} values to element {a}",
                    rs.len()
                ))),
            }
        })
        .collect()
}

/// `v ↦ v⁻¹({1})`.
pub fn prime_from_hom(algebra: &LnAlgebra, v: &[usize]) -> NFilter {
    let top = algebra.n() - 1;
    (0..algebra.len()).filter(|&a| v[a] == top).collect()
}

/// Verifies that `hom_from_prime` and `prime_from_hom` are mutually inverse
/// bijections between the prime n̄-filters and the directly enumerated homs.
pub fn bijection_check(algebra: &LnAlgebra) -> Result<Report, Error> {
    let mut report = Report::new("prime-filter/hom bijection");
    let primes = enumerate_prime_filters(algebra);
    let homs = algebra.enumerate_homs();
    report.record(
        "|primes| = |homs|",
        primes.len() == homs.len(),
        || format!("{} prime filters vs {} homs", primes.len(), homs.len()),
    );
    let mut images = Vec::new();
    for p in &primes {
        let v = hom_from_prime(algebra, p)?;
        report.record(
            "v_P is one of the enumerated homs",
            homs.contains(&v),
            || format!("filter {p:?}"),
        );
        report.record(
            "v_P⁻¹({1}) = P",
            prime_from_hom(algebra, &v) == *p,
            || format!("filter {p:?}"),
        );
        images.push(v);
    }
    for v in &homs {
        let p = prime_from_hom(algebra, v);
        report.record("v⁻¹({1}) is a prime filter", primes.contains(&p), || {
            format!("hom {v:?}")
        });
        report.record(
            "round trip through the filter returns v",
            hom_from_prime(algebra, &p)? == *v,
            || format!("hom {v:?}"),
        );
    }
    images.sort();
    images.dedup();
    report.record("P ↦ v_P is injective", images.len() == primes.len(), || {
        "two filters share a hom".into()
    });
    Ok(report)
}

/// An n̄-fuzzy Boolean system: points, an Łₙᶜ-algebra, and an n-valued
/// satisfaction matrix subject to the Łukasiewicz clauses plus row
/// separation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FBSysN {
    points: Carrier,
    algebra: LnAlgebra,
    /// `sat[x][a]` as chain indices.
    sat: Vec<Vec<usize>>,
}

impl FBSysN {
    pub fn new(points: Carrier, algebra: LnAlgebra, sat: Vec<Vec<usize>>) -> Result<Self, Error> {
        if sat.len() != points.len()
            || sat.iter().any(|row| row.len() != algebra.len() || row.iter().any(|&v| v >= algebra.n()))
        {
            return Err(Error::structural("satisfaction matrix is not an n-valued X × A map"));
        }
        Ok(FBSysN { points, algebra, sat })
    }

    pub fn points(&self) -> &Carrier {
        &self.points
    }

    pub fn algebra(&self) -> &LnAlgebra {
        &self.algebra
    }

    /// Chain index of `gr(x ⊨ a)`.
    pub fn sat_idx(&self, x: usize, a: usize) -> usize {
        self.sat[x][a]
    }

    pub fn sat(&self, x: usize, a: usize) -> TruthValue {
        self.algebra.chain().elements()[self.sat[x][a]]
    }

    pub fn column(&self, a: usize) -> FuzzySubset {
        FuzzySubset::new(
            self.points.clone(),
            (0..self.points.len()).map(|x| self.sat(x, a)).collect(),
        )
        .expect("matrix is total")
    }
}

/// Clauses of an n̄-fuzzy Boolean system: the Def-5.17 laws for `*`, `^⊥`
/// and constants, row separation, and the inherited meet/join clauses.
pub fn check_fbsys(d: &FBSysN) -> Report {
    let mut report = Report::new("n̄-fuzzy Boolean system");
    let ops = d.algebra.ops();
    let (n, m) = (d.points.len(), d.algebra.len());
    let mut bad_mul = None;
    let mut bad_neg = None;
    let mut bad_meet = None;
    let mut bad_join = None;
    for x in 0..n {
        for a in 0..m {
            for b in 0..m {
                if d.sat[x][d.algebra.mul(a, b)] != ops.mul(d.sat[x][a], d.sat[x][b])
                    && bad_mul.is_none()
                {
                    bad_mul = Some((x, a, b));
                }
                if d.sat[x][d.algebra.meet(a, b)] != ops.meet(d.sat[x][a], d.sat[x][b])
                    && bad_meet.is_none()
                {
                    bad_meet = Some((x, a, b));
                }
                if d.sat[x][d.algebra.join(a, b)] != ops.join(d.sat[x][a], d.sat[x][b])
                    && bad_join.is_none()
                {
                    bad_join = Some((x, a, b));
                }
            }
            if d.sat[x][d.algebra.neg(a)] != ops.neg(d.sat[x][a]) && bad_neg.is_none() {
                bad_neg = Some((x, a));
            }
        }
    }
    report.record("gr(x ⊨ a*b) = max(0, gr+gr-1)", bad_mul.is_none(), || {
        let (x, a, b) = bad_mul.unwrap();
        format!("at ({x}, {a}, {b})")
    });
    report.record("gr(x ⊨ a^⊥) = 1 - gr(x ⊨ a)", bad_neg.is_none(), || {
        let (x, a) = bad_neg.unwrap();
        format!("at ({x}, {a})")
    });
    let bad_const = (0..n).find_map(|x| {
        (0..d.algebra.n()).find(|&r| d.sat[x][d.algebra.constant(r)] != r).map(|r| (x, r))
    });
    report.record("gr(x ⊨ r) = r", bad_const.is_none(), || {
        let (x, r) = bad_const.unwrap();
        format!("at point {x}, constant {r}")
    });
    let mut bad_sep = None;
    for x1 in 0..n {
        for x2 in x1 + 1..n {
            if d.sat[x1] == d.sat[x2] && bad_sep.is_none() {
                bad_sep = Some((x1, x2));
            }
        }
    }
    report.record("x₁ ≠ x₂ ⇒ some a separates them", bad_sep.is_none(), || {
        let (x1, x2) = bad_sep.unwrap();
        format!(
            "points {} and {} agree everywhere",
            d.points.points()[x1],
            d.points.points()[x2]
        )
    });
    report.record("inherited: gr(x ⊨ a∧b) = min", bad_meet.is_none(), || {
        let (x, a, b) = bad_meet.unwrap();
        format!("at ({x}, {a}, {b})")
    });
    report.record("inherited: gr(x ⊨ a∨b) = max", bad_join.is_none(), || {
        let (x, a, b) = bad_join.unwrap();
        format!("at ({x}, {a}, {b})")
    });
    report
}

/// `ext_B`: the n-valued space of satisfaction columns.
pub fn ext_b(d: &FBSysN) -> Result<FuzzyTopSpace, Error> {
    let opens: Vec<FuzzySubset> = (0..d.algebra.len()).map(|a| d.column(a)).collect();
    FuzzyTopSpace::new(
        d.points.clone(),
        opens,
        Flavor::NValued { chain: d.algebra.chain().clone() },
    )
}

/// `J_B`: the membership system over `Cont(X, τ)`.
pub fn j_b(space: &FuzzyTopSpace) -> Result<FBSysN, Error> {
    let chain = match space.flavor() {
        Flavor::NValued { chain } => chain.clone(),
        _ => return Err(Error::precondition("J_B needs the n-valued flavor")),
    };
    let basis = crate::space::cont(space)?;
    let elements: Vec<Vec<usize>> = basis
        .iter()
        .map(|t| {
            t.values()
                .iter()
                .map(|&v| chain.index_of(v).expect("cont map lands in the chain"))
                .collect()
        })
        .collect();
    let algebra =
        LnAlgebra::from_elements(chain.n(), space.carrier().points(), &elements)?;
    let sat = (0..space.carrier().len())
        .map(|x| (0..algebra.len()).map(|a| algebra.elements()[a][x]).collect())
        .collect();
    FBSysN::new(space.carrier().clone(), algebra, sat)
}

/// `Lag`: the algebra part.
pub fn lag(d: &FBSysN) -> LnAlgebra {
    d.algebra.clone()
}

/// `S_B(A)`: points are the Łₙᶜ-homs `A → n̄`, realized through the prime
/// filters, with `gr(v ⊨* a) = v(a)`.
pub fn s_b(algebra: &LnAlgebra) -> Result<(FBSysN, Vec<Vec<usize>>), Error> {
    let primes = enumerate_prime_filters(algebra);
    let mut homs = Vec::with_capacity(primes.len());
    for p in &primes {
        homs.push(hom_from_prime(algebra, p)?);
    }
    homs.sort();
    let points = Carrier::new((0..homs.len()).map(|i| format!("v{i}")));
    let sat = homs.clone();
    Ok((FBSysN::new(points, algebra.clone(), sat)?, homs))
}

/// A continuous map of n̄-fuzzy Boolean systems.
#[derive(Debug, Clone)]
pub struct FBSysMap {
    /// `f₁ : X → Y` as target indices.
    pub point_map: Vec<usize>,
    /// `f₂ : B → A` as an element map.
    pub alg_map: Vec<usize>,
}

/// Laws of a continuous map: `f₂` is an Łₙᶜ-hom and
/// `gr(x ⊨ f₂(b)) = gr(f₁(x) ⊨' b)`.
pub fn check_fbsys_map(m: &FBSysMap, d: &FBSysN, e: &FBSysN) -> Report {
    let mut report = Report::new("n̄-fuzzy Boolean system map");
    if m.point_map.len() != d.points.len() || m.point_map.iter().any(|&y| y >= e.points.len()) {
        report.fail("point map", "not total X → Y");
        return report;
    }
    if m.alg_map.len() != e.algebra.len() || m.alg_map.iter().any(|&a| a >= d.algebra.len()) {
        report.fail("algebra map", "not total B → A");
        return report;
    }
    let (ba, aa) = (&e.algebra, &d.algebra);
    let mut bad_hom = None;
    for a in 0..ba.len() {
        for b in 0..ba.len() {
            let ok = m.alg_map[ba.add(a, b)] == aa.add(m.alg_map[a], m.alg_map[b])
                && m.alg_map[ba.mul(a, b)] == aa.mul(m.alg_map[a], m.alg_map[b])
                && m.alg_map[ba.meet(a, b)] == aa.meet(m.alg_map[a], m.alg_map[b])
                && m.alg_map[ba.join(a, b)] == aa.join(m.alg_map[a], m.alg_map[b])
                && m.alg_map[ba.arrow(a, b)] == aa.arrow(m.alg_map[a], m.alg_map[b]);
            if !ok && bad_hom.is_none() {
                bad_hom = Some((a, b));
            }
        }
        if m.alg_map[ba.neg(a)] != aa.neg(m.alg_map[a]) && bad_hom.is_none() {
            bad_hom = Some((a, a));
        }
    }
    let const_ok = (0..ba.n()).all(|r| m.alg_map[ba.constant(r)] == aa.constant(r));
    report.record("f₂ preserves the operations", bad_hom.is_none(), || {
        let (a, b) = bad_hom.unwrap();
        format!("at ({a}, {b})")
    });
    report.record("f₂ fixes the constants", const_ok, || "a constant moves".into());
    let mut bad = None;
    for x in 0..d.points.len() {
        for b in 0..ba.len() {
            if d.sat[x][m.alg_map[b]] != e.sat[m.point_map[x]][b] && bad.is_none() {
                bad = Some((x, b));
            }
        }
    }
    report.record("gr(x ⊨ f₂(b)) = gr(f₁(x) ⊨' b)", bad.is_none(), || {
        let (x, b) = bad.unwrap();
        format!("at ({x}, {b})")
    });
    report
}

/// Homeomorphism per the two-sided-inverse definition: both maps pass the
/// continuity laws and the composites are identities.
pub fn check_homeo(f: &FBSysMap, g: &FBSysMap, d: &FBSysN, e: &FBSysN) -> Report {
    let mut report = Report::new("homeomorphism of n̄-fuzzy Boolean systems");
    report.absorb("f", check_fbsys_map(f, d, e));
    report.absorb("g", check_fbsys_map(g, e, d));
    let gf_points = (0..d.points.len()).all(|x| g.point_map[f.point_map[x]] == x);
    let fg_points = (0..e.points.len()).all(|y| f.point_map[g.point_map[y]] == y);
    report.record("g∘f = id on points", gf_points, || "a point moves".into());
    report.record("f∘g = id on points", fg_points, || "a point moves".into());
    let fg_alg = (0..d.algebra.len()).all(|a| f.alg_map[g.alg_map[a]] == a);
    let gf_alg = (0..e.algebra.len()).all(|b| g.alg_map[f.alg_map[b]] == b);
    report.record("algebra maps invert each other", fg_alg && gf_alg, || {
        "an element moves".into()
    });
    report
}

/// The double-dual counit data of a system: `ext_B* : A → Cont(X, ext_B(A))`
/// must be an Łₙᶜ-isomorphism, and the membership system of the extent must
/// mirror `D`.
pub fn counit_ext_b(d: &FBSysN) -> Result<(FBSysN, FBSysMap), Error> {
    let space = ext_b(d)?;
    let j_ext = j_b(&space)?;
    // a ↦ its column among the Cont elements
    let alg_map = (0..d.algebra().len())
        .map(|a| {
            let col: Vec<usize> = (0..d.points().len()).map(|x| d.sat_idx(x, a)).collect();
            j_ext
                .algebra()
                .elements()
                .iter()
                .position(|e| *e == col)
                .ok_or_else(|| Error::structural("extent column is not continuous"))
        })
        .collect::<Result<Vec<usize>, Error>>()?;
    let map = FBSysMap { point_map: (0..d.points().len()).collect(), alg_map };
    Ok((j_ext, map))
}

/// The unit `(p*, id_A) : D → S_B(Lag(D))`, with `p_x = gr(x ⊨ ·)`.
pub fn unit_s_b(d: &FBSysN) -> Result<(FBSysN, FBSysMap), Error> {
    let (spec, homs) = s_b(&d.algebra)?;
    let point_map = (0..d.points.len())
        .map(|x| {
            homs.iter()
                .position(|v| *v == d.sat[x])
                .ok_or_else(|| Error::structural("p_x is not an Łₙᶜ-hom"))
        })
        .collect::<Result<Vec<usize>, Error>>()?;
    let alg_map = (0..d.algebra.len()).collect();
    Ok((spec, FBSysMap { point_map, alg_map }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_arithmetic_on_three() {
        let a = LnAlgebra::chain_algebra(3).unwrap();
        let half = a.constant(1);
        assert_eq!(a.add(half, half), a.one()); // 1/2 ⊕ 1/2 = 1
        assert_eq!(a.mul(half, half), a.zero()); // 1/2 * 1/2 = 0
        assert_eq!(a.len(), 3);
    }

    #[test]
    fn chains_pass_all_axioms() {
        for n in 2..=6 {
            let a = LnAlgebra::chain_algebra(n).unwrap();
            let report = check_lnc(&RawTables::of(&a));
            assert!(report.ok(), "chain {n} failed:\n{report}");
        }
    }

    #[test]
    fn broken_de_morgan_table_fails() {
        let a = LnAlgebra::chain_algebra(3).unwrap();
        let mut t = RawTables::of(&a);
        t.mul[1][1] = 1; // 1/2 * 1/2 should be 0
        let report = check_lnc(&t);
        assert!(!report.ok());
        assert!(report.failures().any(|c| c.law.starts_with("axiom 5")));
    }

    #[test]
    fn function_algebra_of_constants_only() {
        let a = LnAlgebra::function_algebra(3, &["x".into(), "y".into()], &[]).unwrap();
        assert_eq!(a.len(), 3);
        let report = check_lnc(&RawTables::of(&a));
        assert!(report.ok());
    }

    #[test]
    fn t_and_s_terms() {
        let a = LnAlgebra::chain_algebra(3).unwrap();
        let half = a.constant(1);
        assert_eq!(a.t_term(1, half).unwrap(), a.one());
        assert_eq!(a.t_term(1, a.one()).unwrap(), a.zero());
        // idempotence of T_r
        let t = a.t_term(1, half).unwrap();
        assert_eq!(a.mul(t, t), t);
        assert_eq!(a.s_term(2, a.one()).unwrap(), a.one());
        assert_eq!(a.s_term(1, a.one()).unwrap(), a.constant(1));
        assert_eq!(a.s_term(1, half).unwrap(), a.zero());
    }

    #[test]
    fn filters_of_small_chains() {
        let three = LnAlgebra::chain_algebra(3).unwrap();
        let filters = enumerate_nfilters(&three);
        // {1} and the improper whole algebra; {1/2, 1} fails *-closure
        assert_eq!(filters.len(), 2);
        let primes = enumerate_prime_filters(&three);
        assert_eq!(primes, vec![vec![three.one()]]);

        let two = LnAlgebra::chain_algebra(2).unwrap();
        let primes2 = enumerate_prime_filters(&two);
        assert_eq!(primes2, vec![vec![two.one()]]);
    }

    #[test]
    fn extend_filter_avoids_bottom() {
        let three = LnAlgebra::chain_algebra(3).unwrap();
        let f = vec![three.one()];
        let p = extend_filter(&three, &f, three.zero()).unwrap();
        assert_eq!(p, vec![three.one()]);
        assert!(extend_filter(&three, &f, three.one()).is_err());
    }

    #[test]
    fn bijection_on_the_chain_and_a_square() {
        let three = LnAlgebra::chain_algebra(3).unwrap();
        assert!(bijection_check(&three).unwrap().ok());
        // v_P for P = {1} is the identity on the chain
        let v = hom_from_prime(&three, &vec![three.one()]).unwrap();
        assert_eq!(v, vec![0, 1, 2]);

        let sq = LnAlgebra::function_algebra(
            2,
            &["x".into(), "y".into()],
            &[vec![1, 0]],
        )
        .unwrap();
        assert!(bijection_check(&sq).unwrap().ok());
    }

    #[test]
    fn one_point_system_and_its_dual() {
        let a = LnAlgebra::chain_algebra(3).unwrap();
        let points = Carrier::new(["x"]);
        let sat = vec![(0..a.len()).map(|e| a.elements()[e][0]).collect()];
        let d = FBSysN::new(points, a, sat).unwrap();
        assert!(check_fbsys(&d).ok());

        let space = ext_b(&d).unwrap();
        assert!(crate::space::check_space(&space).ok());
        assert!(crate::space::is_boolean_space(&space).unwrap());

        let (j_ext, counit) = counit_ext_b(&d).unwrap();
        assert!(check_fbsys(&j_ext).ok());
        let report = check_fbsys_map(&counit, &j_ext, &d);
        assert!(report.ok(), "{report}");
        // counit is an isomorphism here
        assert_eq!(j_ext.algebra().len(), d.algebra().len());

        let (spec, unit) = unit_s_b(&d).unwrap();
        assert!(check_fbsys(&spec).ok());
        assert!(check_fbsys_map(&unit, &d, &spec).ok());
        assert_eq!(spec.points().len(), d.points().len());
    }

    #[test]
    fn s_b_of_the_three_chain_has_one_point() {
        let a = LnAlgebra::chain_algebra(3).unwrap();
        let (spec, homs) = s_b(&a).unwrap();
        assert_eq!(homs.len(), 1);
        assert!(check_fbsys(&spec).ok());
    }
}

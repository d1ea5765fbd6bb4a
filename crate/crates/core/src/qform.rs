//! Q/Z-valued quadratic forms on finite abelian groups.
//!
//! By the Eilenberg-MacLane classification, a braided categorical group with
//! pi1 = U(1) and finite pi0 is exactly a pair (A, q) of a finite abelian
//! group and a quadratic form q : A -> Q/Z. Forms are stored on generators:
//! diagonal values q(gi) plus the polarised bilinear values sigma(gi, gj),
//! with the evaluation law
//!
//!   q(sum ai gi) = sum ai^2 q(gi) + sum_{i<j} ai aj sigma(gi, gj).

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use std::collections::HashSet;
use std::fmt;

use crate::abelian::{AbElem, FiniteAbGroup};
use crate::error::{Error, Result};
use crate::qz::{qz, QZElem};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QForm {
    group: FiniteAbGroup,
    diag: Vec<QZElem>,
    /// full symmetric matrix of sigma(gi, gj); the diagonal holds
    /// sigma(gi, gi) = 2 q(gi) for convenience
    offdiag: Vec<Vec<QZElem>>,
}

impl QForm {
    /// Shape-checked constructor. The diagonal of `offdiag` may be anything;
    /// it is overwritten by 2 q(gi). Torsion identities are NOT enforced
    /// here so that `is_quadratic` can reject bad data explicitly.
    pub fn new(group: FiniteAbGroup, diag: Vec<QZElem>, offdiag: Vec<Vec<QZElem>>) -> Result<Self> {
        let m = group.rank();
        if diag.len() != m || offdiag.len() != m || offdiag.iter().any(|r| r.len() != m) {
            return Err(Error::ElementShape(format!(
                "form shape does not match group rank {m}"
            )));
        }
        for i in 0..m {
            for j in 0..i {
                if offdiag[i][j] != offdiag[j][i] {
                    return Err(Error::ElementShape(format!("sigma({i},{j}) not symmetric")));
                }
            }
        }
        let mut offdiag = offdiag;
        for i in 0..m {
            offdiag[i][i] = diag[i].scale_i64(2);
        }
        Ok(QForm {
            group,
            diag,
            offdiag,
        })
    }

    pub fn trivial(group: FiniteAbGroup) -> Self {
        let m = group.rank();
        QForm {
            group,
            diag: vec![QZElem::zero(); m],
            offdiag: vec![vec![QZElem::zero(); m]; m],
        }
    }

    /// Form on a cyclic group Z/n with q(1) = value.
    pub fn cyclic(n: impl Into<BigInt>, value: QZElem) -> Self {
        let group = FiniteAbGroup::cyclic(n);
        if group.is_trivial() {
            return Self::trivial(group);
        }
        QForm {
            group,
            offdiag: vec![vec![value.scale_i64(2)]],
            diag: vec![value],
        }
    }

    pub fn group(&self) -> &FiniteAbGroup {
        &self.group
    }

    pub fn diag(&self) -> &[QZElem] {
        &self.diag
    }

    pub fn sigma_gen(&self, i: usize, j: usize) -> &QZElem {
        &self.offdiag[i][j]
    }

    /// Value of the form at an element (coordinates are reduced first).
    pub fn eval(&self, x: &AbElem) -> Result<QZElem> {
        let x = self.group.reduce(x)?;
        let mut acc = QZElem::zero();
        for (i, a) in x.iter().enumerate() {
            acc = acc.add(&self.diag[i].scale(&(a * a)));
            for (j, b) in x.iter().enumerate().take(i) {
                acc = acc.add(&self.offdiag[i][j].scale(&(a * b)));
            }
        }
        Ok(acc)
    }

    /// Polarised bilinear form sigma(a, b) = q(a+b) - q(a) - q(b).
    pub fn sigma(&self, a: &AbElem, b: &AbElem) -> Result<QZElem> {
        let sum = self
            .group
            .add(&self.group.reduce(a)?, &self.group.reduce(b)?);
        Ok(self.eval(&sum)?.sub(&self.eval(a)?).sub(&self.eval(b)?))
    }

    /// Full table of sigma on all element pairs (guarded).
    pub fn sigma_table(&self, limit: u64) -> Result<Vec<Vec<QZElem>>> {
        let elems = self.group.elements(limit)?;
        let mut out = Vec::with_capacity(elems.len());
        for a in &elems {
            let mut row = Vec::with_capacity(elems.len());
            for b in &elems {
                row.push(self.sigma(a, b)?);
            }
            out.push(row);
        }
        Ok(out)
    }

    /// Exhaustive check that the stored data defines a genuine quadratic
    /// form: torsion identities, q(n a) = n^2 q(a) for all a and n up to the
    /// exponent, and bilinearity of sigma in both arguments.
    pub fn is_quadratic(&self) -> Result<bool> {
        const GUARD: u64 = 1_000_000;
        let order = self.group.order().to_u64().unwrap_or(u64::MAX);
        if order > GUARD {
            return Err(Error::SizeGuard(format!(
                "is_quadratic guard: order {order} > {GUARD}"
            )));
        }
        // torsion identities on the stored generator data
        let factors = self.group.invariant_factors();
        for (i, d) in factors.iter().enumerate() {
            if !self.diag[i].scale(&(d * d)).is_zero() {
                return Ok(false);
            }
            for j in 0..factors.len() {
                if !self.offdiag[i][j].scale(d).is_zero() {
                    return Ok(false);
                }
            }
        }
        let tbl = ValueTable::build(self)?;
        // q(0) = 0 and q(n a) = n^2 q(a), walking multiples by index
        if !tbl.q[tbl.zero].is_zero() {
            return Ok(false);
        }
        let exponent = self.group.exponent().to_u64().expect("guarded");
        for a in 0..tbl.len() {
            let mut cur = tbl.zero;
            for n in 0..=exponent {
                let nn = BigInt::from(n) * BigInt::from(n);
                if tbl.q[cur] != tbl.q[a].scale(&nn) {
                    return Ok(false);
                }
                cur = tbl.sum(cur, a);
            }
        }
        // bilinearity of sigma, via the cube law
        //   q(a+b+c) - q(a+b) - q(a+c) - q(b+c) + q(a) + q(b) + q(c) = 0.
        // Full cube on small groups; for larger ones, additivity against
        // each generator propagates to all first arguments by induction,
        // which is an equivalent test.
        let n = tbl.len();
        let firsts: Vec<usize> = if n <= 64 {
            (0..n).collect()
        } else {
            self.group
                .generators()
                .iter()
                .map(|g| tbl.index_of(g))
                .collect()
        };
        for &a in &firsts {
            for b in 0..n {
                let ab = tbl.sum(a, b);
                for c in 0..n {
                    let lhs = tbl.q[tbl.sum(ab, c)]
                        .add(&tbl.q[a])
                        .add(&tbl.q[b])
                        .add(&tbl.q[c]);
                    let rhs = tbl.q[ab]
                        .add(&tbl.q[tbl.sum(a, c)])
                        .add(&tbl.q[tbl.sum(b, c)]);
                    if lhs != rhs {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// The radical of sigma is trivial.
    pub fn sigma_nondegenerate(&self, limit: u64) -> Result<bool> {
        let elems = self.group.elements(limit)?;
        for a in &elems {
            if self.group.is_zero_elem(a) {
                continue;
            }
            let mut pairs_trivially = true;
            for g in self.group.generators() {
                if !self.sigma(a, &g)?.is_zero() {
                    pairs_trivially = false;
                    break;
                }
            }
            if pairs_trivially {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for QForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", descriptor(self))
    }
}

/// Cached per-element q values with index-based addition, so the exhaustive
/// checks avoid re-running bignum evaluation in inner loops.
struct ValueTable {
    elems: Vec<AbElem>,
    index: std::collections::HashMap<AbElem, usize>,
    q: Vec<QZElem>,
    zero: usize,
    group: FiniteAbGroup,
    /// dense sum table for small groups, lazily unused otherwise
    sums: Option<Vec<usize>>,
}

impl ValueTable {
    fn build(form: &QForm) -> Result<Self> {
        let elems = form.group.elements(1_000_000)?;
        let mut index = std::collections::HashMap::with_capacity(elems.len());
        for (i, e) in elems.iter().enumerate() {
            index.insert(e.clone(), i);
        }
        let q: Vec<QZElem> = elems
            .iter()
            .map(|e| form.eval(e).expect("canonical element"))
            .collect();
        let zero = index[&form.group.zero()];
        let n = elems.len();
        let sums = if n <= 256 {
            let mut t = vec![0usize; n * n];
            for a in 0..n {
                for b in 0..=a {
                    let s = index[&form.group.add(&elems[a], &elems[b])];
                    t[a * n + b] = s;
                    t[b * n + a] = s;
                }
            }
            Some(t)
        } else {
            None
        };
        Ok(ValueTable {
            group: form.group.clone(),
            elems,
            index,
            q,
            zero,
            sums,
        })
    }

    fn len(&self) -> usize {
        self.elems.len()
    }

    fn index_of(&self, e: &AbElem) -> usize {
        self.index[e]
    }

    fn sum(&self, a: usize, b: usize) -> usize {
        match &self.sums {
            Some(t) => t[a * self.len() + b],
            None => self.index[&self.group.add(&self.elems[a], &self.elems[b])],
        }
    }
}

/// Canonical text descriptor: group shape plus q on generators (and sigma
/// when there is more than one generator).
pub fn descriptor(q: &QForm) -> String {
    if q.group().is_trivial() {
        return "0".to_string();
    }
    let mut parts = vec![format!("{}", q.group())];
    let qs: Vec<String> = q
        .diag()
        .iter()
        .enumerate()
        .map(|(i, v)| format!("q(g{})={}", i + 1, v))
        .collect();
    parts.push(qs.join(", "));
    let m = q.group().rank();
    if m > 1 {
        let mut sig = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                sig.push(format!(
                    "sigma(g{},g{})={}",
                    i + 1,
                    j + 1,
                    q.sigma_gen(i, j)
                ));
            }
        }
        parts.push(sig.join(", "));
    }
    parts.join(": ")
}

/// Names for the braided categorical groups that occur on Z/2 and the
/// trivial group, after the usual tensor-category notation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BraidedName {
    Vec,
    VecZ2,
    Semi,
    SVec,
    SemiBar,
    Structured(String),
}

impl fmt::Display for BraidedName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidedName::Vec => write!(f, "Vec"),
            BraidedName::VecZ2 => write!(f, "VecZ2"),
            BraidedName::Semi => write!(f, "Semi"),
            BraidedName::SVec => write!(f, "sVec"),
            BraidedName::SemiBar => write!(f, "SemiBar"),
            BraidedName::Structured(d) => write!(f, "Structured[{d}]"),
        }
    }
}

/// Canonical name: the Z/2 table q(1) in {0, 1/4, 1/2, 3/4} maps to
/// {VecZ2, Semi, sVec, SemiBar}; the trivial group is Vec; anything else is
/// Structured with a descriptor.
pub fn name_form(q: &QForm) -> BraidedName {
    if q.group().is_trivial() {
        return BraidedName::Vec;
    }
    if q.group().invariant_factors() == [BigInt::from(2)] {
        let v = &q.diag()[0];
        if v.is_zero() {
            return BraidedName::VecZ2;
        }
        if *v == qz(1, 4) {
            return BraidedName::Semi;
        }
        if *v == qz(1, 2) {
            return BraidedName::SVec;
        }
        if *v == qz(3, 4) {
            return BraidedName::SemiBar;
        }
    }
    BraidedName::Structured(descriptor(q))
}

/// All quadratic forms on Z/n. There are n of them for odd n and 2n for
/// even n: q(1) ranges over (1/g)Z/Z with g = gcd(2n, n^2).
pub fn enumerate_qforms(n: u64) -> Vec<QForm> {
    assert!(n >= 1);
    if n == 1 {
        return vec![QForm::trivial(FiniteAbGroup::trivial())];
    }
    let g = if n % 2 == 0 { 2 * n } else { n };
    (0..g)
        .map(|j| QForm::cyclic(n, qz(j as i64, g as i64)))
        .collect()
}

/// Order of the soft part of H^3(B Z/n, U(1)): the image of the quadratic
/// forms among associators, computed as |Quad| / |Bilin| with |Bilin| = n.
pub fn soft_h3_order(n: u64) -> u64 {
    assert!(n >= 1);
    let quad = enumerate_qforms(n).len() as u64;
    quad / n
}

/// Brute-force isometry test: is there a group isomorphism phi with
/// q_b(phi(x)) = q_a(x)? Searches images of the generators of `a` among
/// elements of `b`, pruning by q and sigma on generators.
pub fn iso_forms(a: &QForm, b: &QForm) -> Result<bool> {
    const GUARD: u64 = 10_000;
    let order = a.group().order();
    if order != b.group().order() {
        return Ok(false);
    }
    if order.to_u64().map_or(true, |o| o > GUARD) {
        return Err(Error::SizeGuard(format!(
            "iso_forms guard: order {order} > {GUARD}"
        )));
    }
    if a.group().invariant_factors() != b.group().invariant_factors() {
        return Ok(false);
    }
    if a.group().is_trivial() {
        return Ok(true);
    }
    let elems_b = b.group().elements(GUARD)?;
    // candidate images per generator: elements killed by the generator order
    let factors = a.group().invariant_factors().to_vec();
    let mut candidates: Vec<Vec<AbElem>> = Vec::new();
    for (i, d) in factors.iter().enumerate() {
        let qa = &a.diag()[i];
        let c: Vec<AbElem> = elems_b
            .iter()
            .filter(|e| {
                b.group().is_zero_elem(&b.group().scale(d, e)) && b.eval(e).expect("shape") == *qa
            })
            .cloned()
            .collect();
        candidates.push(c);
    }
    let mut images: Vec<AbElem> = Vec::new();
    Ok(search_iso(a, b, &candidates, &mut images)?)
}

fn search_iso(
    a: &QForm,
    b: &QForm,
    candidates: &[Vec<AbElem>],
    images: &mut Vec<AbElem>,
) -> Result<bool> {
    let i = images.len();
    if i == candidates.len() {
        return Ok(is_bijective_image(a.group(), b.group(), images));
    }
    'next: for cand in &candidates[i] {
        for (j, prev) in images.iter().enumerate() {
            if b.sigma(cand, prev)? != *a.sigma_gen(i, j) {
                continue 'next;
            }
        }
        images.push(cand.clone());
        if search_iso(a, b, candidates, images)? {
            return Ok(true);
        }
        images.pop();
    }
    Ok(false)
}

fn is_bijective_image(ga: &FiniteAbGroup, gb: &FiniteAbGroup, images: &[AbElem]) -> bool {
    // the map on generators extends to a homomorphism by the candidate
    // order filter; surjectivity of a same-order map is bijectivity
    let elems = ga.elements(10_000).expect("guard checked by caller");
    let mut seen = HashSet::with_capacity(elems.len());
    for x in &elems {
        let mut img = gb.zero();
        for (c, g) in x.iter().zip(images) {
            img = gb.add(&img, &gb.scale(c, g));
        }
        seen.insert(img);
    }
    seen.len() == elems.len()
}

/// Gauss sum of the form: sum over A of exp(2 pi i q(a)). The complex value
/// is advisory (the only floating point in the crate); the exact multiset of
/// Q/Z values is returned alongside and is what tests compare.
pub struct GaussSum {
    pub re: f64,
    pub im: f64,
    /// sorted (value, multiplicity) pairs
    pub values: Vec<(QZElem, u64)>,
}

impl GaussSum {
    pub fn norm_sq(&self) -> f64 {
        self.re * self.re + self.im * self.im
    }
}

pub fn gauss_sum(q: &QForm) -> Result<GaussSum> {
    const GUARD: u64 = 1_000_000;
    let elems = q.group().elements(GUARD)?;
    let mut counts: std::collections::BTreeMap<QZElem, u64> = Default::default();
    for a in &elems {
        *counts.entry(q.eval(a)?).or_insert(0) += 1;
    }
    let (mut re, mut im) = (0.0, 0.0);
    for (v, c) in &counts {
        let angle = v.angle();
        re += (*c as f64) * angle.cos();
        im += (*c as f64) * angle.sin();
    }
    Ok(GaussSum {
        re,
        im,
        values: counts.into_iter().collect(),
    })
}

/// Direct sum of forms: groups direct-sum (re-canonicalised to an
/// invariant-factor chain), q of a tuple is the sum of the component
/// values, sigma has no cross terms. Returns the combined form and, per
/// part, the images of that part's generators in the combined group.
pub fn direct_sum_forms(parts: &[QForm]) -> (QForm, Vec<Vec<AbElem>>) {
    let mut orders: Vec<BigInt> = Vec::new();
    let mut part_offsets = Vec::new();
    for p in parts {
        part_offsets.push(orders.len());
        orders.extend(p.group().invariant_factors().iter().cloned());
    }
    let (group, gen_images) = FiniteAbGroup::from_orders(&orders);
    // q and sigma on the block generators
    let block_q: Vec<QZElem> = parts
        .iter()
        .flat_map(|p| p.diag().iter().cloned())
        .collect();
    let u = orders.len();
    let mut block_sigma = vec![vec![QZElem::zero(); u]; u];
    for (pi, p) in parts.iter().enumerate() {
        let off = part_offsets[pi];
        let m = p.group().rank();
        for i in 0..m {
            for j in 0..m {
                block_sigma[off + i][off + j] = p.sigma_gen(i, j).clone();
            }
        }
    }
    // transport to the canonical generators: each canonical generator is an
    // integer combination of block generators, namely a lift through the
    // canonicalisation; evaluate by bilinearity/quadraticity.
    // gen_images[i] gives canonical coords of block generator i, so we need
    // the inverse direction: express canonical generators in block coords.
    // From a lift of each canonical generator in the block presentation:
    let m_new = group.rank();
    // Solve: find integer coords c (block) with sum c_i * gen_images[i] = e_k.
    // The canonicalisation comes from SNF of diag(orders): use it directly.
    let lifts = canonical_lifts(&orders, &group);
    let eval_block_q = |coords: &[BigInt]| -> QZElem {
        let mut acc = QZElem::zero();
        for i in 0..u {
            acc = acc.add(&block_q[i].scale(&(&coords[i] * &coords[i])));
            for j in 0..i {
                acc = acc.add(&block_sigma[i][j].scale(&(&coords[i] * &coords[j])));
            }
        }
        acc
    };
    let mut diag = Vec::with_capacity(m_new);
    for k in 0..m_new {
        diag.push(eval_block_q(&lifts[k]));
    }
    let mut offdiag = vec![vec![QZElem::zero(); m_new]; m_new];
    for k in 0..m_new {
        for l in 0..k {
            let sum: Vec<BigInt> = lifts[k].iter().zip(&lifts[l]).map(|(x, y)| x + y).collect();
            let s = eval_block_q(&sum)
                .sub(&eval_block_q(&lifts[k]))
                .sub(&eval_block_q(&lifts[l]));
            offdiag[k][l] = s.clone();
            offdiag[l][k] = s;
        }
    }
    let form = QForm::new(group, diag, offdiag).expect("shape by construction");
    // split the generator images back out per part
    let mut out = Vec::new();
    for (pi, p) in parts.iter().enumerate() {
        let off = part_offsets[pi];
        out.push(gen_images[off..off + p.group().rank()].to_vec());
    }
    (form, out)
}

/// Integer lifts (in the cyclic-order coordinates) of the canonical
/// generators produced by `FiniteAbGroup::from_orders`.
fn canonical_lifts(orders: &[BigInt], group: &FiniteAbGroup) -> Vec<Vec<BigInt>> {
    let n = orders.len();
    let mut diag_m = crate::matrix::IntMatrix::zeros(n, n);
    for (i, c) in orders.iter().enumerate() {
        diag_m.set(i, i, c.clone());
    }
    let (g2, _, map) = crate::abelian::cokernel(&diag_m, n);
    assert_eq!(g2.invariant_factors(), group.invariant_factors());
    (0..group.rank()).map(|i| map_lift(&map, i)).collect()
}

fn map_lift(map: &crate::abelian::CokernelMap, i: usize) -> Vec<BigInt> {
    map.torsion_lift(i)
}

/// The hyperbolic form on H + dual(H): generators interleaved as
/// (g1, ghat1, g2, ghat2, ...), q = 0 on all generators and
/// sigma(gi, ghat_i) = 1/ci. This is the Drinfel'd double of the trivial
/// associator, used as the oracle's expected answer.
pub fn hyperbolic_form(h: &FiniteAbGroup) -> QForm {
    let mut factors = Vec::new();
    for c in h.invariant_factors() {
        factors.push(c.clone());
        factors.push(c.clone());
    }
    let group = FiniteAbGroup::new(factors).expect("interleaved chain");
    let m = group.rank();
    let mut offdiag = vec![vec![QZElem::zero(); m]; m];
    for (pair, c) in h.invariant_factors().iter().enumerate() {
        let i = 2 * pair;
        let s = QZElem::new(BigInt::one(), c.clone()).expect("c >= 2");
        offdiag[i][i + 1] = s.clone();
        offdiag[i + 1][i] = s;
    }
    QForm::new(group, vec![QZElem::zero(); m], offdiag).expect("shape")
}

/// Elementwise condensation of a finite form by an isotropic subgroup:
/// Z-perp = { x : sigma(x, z) = 0 for all z }, then Z-perp / Z with the
/// induced form. This path enumerates elements and cosets directly and
/// derives the invariant factors by torsion counting, sharing no lattice
/// machinery with the structured pipeline; it exists as an independent
/// cross-check.
pub fn condense_elementwise(q: &QForm, z_gens: &[AbElem]) -> Result<(FiniteAbGroup, QForm)> {
    const GUARD: u64 = 4096;
    let g = q.group();
    let elems = g.elements(GUARD)?;
    // the subgroup Z as a set
    let mut z_set: HashSet<AbElem> = HashSet::new();
    z_set.insert(g.zero());
    loop {
        let mut grew = false;
        let cur: Vec<AbElem> = z_set.iter().cloned().collect();
        for a in &cur {
            for gen in z_gens {
                let s = g.add(a, gen);
                if z_set.insert(s) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    // q must vanish on Z
    for z in &z_set {
        if !q.eval(z)?.is_zero() {
            return Err(Error::LevelDoesNotDescend);
        }
    }
    // Z-perp elementwise
    let mut perp: Vec<AbElem> = Vec::new();
    'outer: for x in &elems {
        for z in &z_set {
            if !q.sigma(x, z)?.is_zero() {
                continue 'outer;
            }
        }
        perp.push(x.clone());
    }
    // cosets of Z inside Z-perp
    let mut coset_of: std::collections::HashMap<AbElem, usize> = Default::default();
    let mut reps: Vec<AbElem> = Vec::new();
    for x in &perp {
        if coset_of.contains_key(x) {
            continue;
        }
        let idx = reps.len();
        for z in &z_set {
            coset_of.insert(g.add(x, z), idx);
        }
        reps.push(x.clone());
    }
    // q is well-defined on cosets
    for x in &perp {
        let qx = q.eval(x)?;
        for z in &z_set {
            if q.eval(&g.add(x, z))? != qx {
                return Err(Error::ElementShape("q not constant on a coset of Z".into()));
            }
        }
    }
    let n = reps.len() as u64;
    // abstract group structure on cosets
    let add_cosets = |a: usize, b: usize| -> usize { coset_of[&g.add(&reps[a], &reps[b])] };
    // invariant factors by torsion counting: |{ x : p^j x = 0 }| determines
    // the p-partition, no lattice reduction involved
    let zero_idx = coset_of[&g.zero()];
    let factors = invariant_factors_by_counting(n, |a, k| {
        let mut acc = zero_idx;
        for _ in 0..k {
            acc = add_cosets(acc, a);
        }
        acc == zero_idx
    });
    let group = FiniteAbGroup::new(factors.clone())?;
    if group.order() != BigInt::from(n) {
        return Err(Error::ElementShape("torsion counting mismatch".into()));
    }
    // find generators realising the decomposition by depth-first search
    let gens = find_generators_by_search(n as usize, &factors, &add_cosets, &coset_of, g)?;
    // read q and sigma off the representatives
    let mut diag = Vec::new();
    for &a in &gens {
        diag.push(q.eval(&reps[a])?);
    }
    let mut offdiag = vec![vec![QZElem::zero(); gens.len()]; gens.len()];
    for (i, &a) in gens.iter().enumerate() {
        for (j, &b) in gens.iter().enumerate().take(i) {
            let s = q.sigma(&reps[a], &reps[b])?;
            offdiag[i][j] = s.clone();
            offdiag[j][i] = s;
        }
    }
    let form = QForm::new(group.clone(), diag, offdiag)?;
    Ok((group, form))
}

/// Invariant factors of an abstract finite abelian group of order n given a
/// predicate `kills(elem_index, k)` telling whether k * element = 0.
fn invariant_factors_by_counting(n: u64, kills: impl Fn(usize, u64) -> bool) -> Vec<BigInt> {
    if n == 1 {
        return vec![];
    }
    // factor n
    let mut primes = Vec::new();
    let mut rem = n;
    let mut p = 2u64;
    while p * p <= rem {
        if rem % p == 0 {
            primes.push(p);
            while rem % p == 0 {
                rem /= p;
            }
        }
        p += 1;
    }
    if rem > 1 {
        primes.push(rem);
    }
    // per prime: lambda partition from torsion counts
    let mut partitions: Vec<(u64, Vec<u32>)> = Vec::new();
    for &p in &primes {
        let mut counts = vec![0u64]; // log_p |A[p^j]| for j = 0, 1, ...
        let mut j = 1u32;
        loop {
            let pj = p.pow(j);
            let c = (0..n as usize).filter(|&a| kills(a, pj)).count() as u64;
            let mut log = 0u64;
            let mut c2 = c;
            while c2 > 1 {
                assert_eq!(c2 % p, 0);
                c2 /= p;
                log += 1;
            }
            counts.push(log);
            if counts[j as usize] == counts[(j - 1) as usize] {
                counts.pop();
                break;
            }
            j += 1;
        }
        // lambda_i = #{ j : counts[j] - counts[j-1] >= i }, i.e. the number
        // of cyclic p-power factors of exponent >= p^j is the increment
        let mut incs: Vec<u64> = (1..counts.len())
            .map(|j| counts[j] - counts[j - 1])
            .collect();
        incs.push(0);
        let mut lambda = Vec::new();
        for j in 0..incs.len() - 1 {
            // incs[j] factors have exponent > p^j; those with exponent
            // exactly p^(j+1) number incs[j] - incs[j+1]
            for _ in 0..(incs[j] - incs[j + 1]) {
                lambda.push((j + 1) as u32);
            }
        }
        lambda.sort_unstable_by(|a, b| b.cmp(a));
        partitions.push((p, lambda));
    }
    // combine into invariant factors, largest first
    let max_len = partitions.iter().map(|(_, l)| l.len()).max().unwrap_or(0);
    let mut factors = Vec::new();
    for i in 0..max_len {
        let mut d = BigInt::one();
        for (p, lambda) in &partitions {
            if i < lambda.len() {
                d *= BigInt::from(*p).pow(lambda[i]);
            }
        }
        factors.push(d);
    }
    factors.reverse();
    factors
}

fn find_generators_by_search(
    n: usize,
    factors: &[BigInt],
    add_cosets: &impl Fn(usize, usize) -> usize,
    coset_of: &std::collections::HashMap<AbElem, usize>,
    ambient: &FiniteAbGroup,
) -> Result<Vec<usize>> {
    let zero_idx = coset_of[&ambient.zero()];
    let order_of = |a: usize| -> u64 {
        let mut acc = add_cosets(zero_idx, a);
        let mut k = 1u64;
        while acc != zero_idx {
            acc = add_cosets(acc, a);
            k += 1;
        }
        k
    };
    let orders: Vec<u64> = (0..n).map(&order_of).collect();
    // depth-first: pick elements of the exact target orders whose partial
    // spans are direct (span size multiplies)
    fn dfs(
        chosen: &mut Vec<usize>,
        span: &mut HashSet<usize>,
        factors: &[BigInt],
        orders: &[u64],
        n: usize,
        zero_idx: usize,
        add_cosets: &impl Fn(usize, usize) -> usize,
    ) -> bool {
        let i = chosen.len();
        if i == factors.len() {
            return span.len() == n;
        }
        let want = factors[factors.len() - 1 - i].to_u64().unwrap();
        for cand in 0..n {
            if orders[cand] != want {
                continue;
            }
            // extend the span by <cand> and demand directness
            let mut new_span = HashSet::new();
            let mut pow = zero_idx;
            let mut ok = true;
            'build: for k in 0..orders[cand] {
                if k > 0 && pow == zero_idx {
                    break 'build;
                }
                for &s in span.iter() {
                    let e = add_cosets(s, pow);
                    if !new_span.insert(e) {
                        ok = false;
                        break 'build;
                    }
                }
                pow = add_cosets(pow, cand);
            }
            if !ok || new_span.len() != span.len() * orders[cand] as usize {
                continue;
            }
            chosen.push(cand);
            let mut saved = std::mem::replace(span, new_span);
            if dfs(chosen, span, factors, orders, n, zero_idx, add_cosets) {
                return true;
            }
            std::mem::swap(span, &mut saved);
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    let mut span: HashSet<usize> = HashSet::new();
    span.insert(zero_idx);
    if dfs(
        &mut chosen,
        &mut span,
        factors,
        &orders,
        n,
        zero_idx,
        add_cosets,
    ) {
        // reorder to match ascending invariant factors
        chosen.reverse();
        Ok(chosen)
    } else {
        Err(Error::ElementShape(
            "no generator decomposition found".into(),
        ))
    }
}

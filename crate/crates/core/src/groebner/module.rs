//! Free modules with Schreyer orders and one-pass syzygy computation.
//!
//! Every free module `F_L` in a resolution carries the order induced from the
//! leading terms of the Gröbner basis it maps onto. A term `m * e_i` is keyed
//! by the monomial `m * T_i` of the base ring (where `T_i` is the fully
//! expanded leading monomial of the image of `e_i`), compared in degrevlex,
//! and ties are broken by the chain of generator indices from the bottom
//! level up, a smaller index being larger. `F_0 = R` is the base case with a
//! single generator, `T_0 = 1` and an empty chain.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::exactalg::{degrevlex_slices, Coeff, Monomial, PolyRing, Polynomial, PrimeField};
use crate::par::{self, Exec};

use super::{GroebnerBasis, GroebnerError};

/// One term `coeff * mono * e_comp`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModTerm {
    pub mono: Monomial,
    pub comp: u32,
    pub coeff: Coeff,
}

/// Sparse module element as a term list sorted descending in a [`SchreyerOrder`].
pub type SVec = Vec<ModTerm>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchreyerOrder {
    degrees: Vec<i32>,
    lead: Vec<Monomial>,
    chain: Vec<Vec<u32>>,
}

impl SchreyerOrder {
    /// The ring itself as a free module of rank one.
    pub fn base(nvars: usize) -> Self {
        SchreyerOrder { degrees: vec![0], lead: vec![Monomial::one(nvars)], chain: vec![Vec::new()] }
    }

    /// Order on the free module whose generators map to elements with the
    /// given leading terms `(mono, comp)` in the module ordered by `self`.
    pub fn induced(&self, leading: &[(Monomial, u32)]) -> Self {
        let mut degrees = Vec::with_capacity(leading.len());
        let mut lead = Vec::with_capacity(leading.len());
        let mut chain = Vec::with_capacity(leading.len());
        for (i, (m, c)) in leading.iter().enumerate() {
            let c = *c as usize;
            degrees.push(m.degree() as i32 + self.degrees[c]);
            lead.push(m.mul(&self.lead[c]));
            let mut ch = self.chain[c].clone();
            ch.push(i as u32);
            chain.push(ch);
        }
        SchreyerOrder { degrees, lead, chain }
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> i32 {
        self.degrees[i]
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, ia: u32, b: &Monomial, ib: u32) -> Ordering {
        let (ta, tb) = (&self.lead[ia as usize], &self.lead[ib as usize]);
        let n = a.nvars();
        let mut ea = [0u16; 64];
        let mut eb = [0u16; 64];
        for v in 0..n {
            ea[v] = a.exponent(v) + ta.exponent(v);
            eb[v] = b.exponent(v) + tb.exponent(v);
        }
        const ONES: [u32; 64] = [1; 64];
        degrevlex_slices(&ea[..n], &eb[..n], &ONES[..n]).then_with(|| {
            let (ca, cb) = (&self.chain[ia as usize], &self.chain[ib as usize]);
            for (x, y) in ca.iter().zip(cb) {
                if x != y {
                    return y.cmp(x);
                }
            }
            Ordering::Equal
        })
    }

    #[inline]
    fn cmp_terms(&self, a: &ModTerm, b: &ModTerm) -> Ordering {
        self.cmp(&a.mono, a.comp, &b.mono, b.comp)
    }

    /// Sorts and combines terms.
    pub fn normalize(&self, field: &PrimeField, mut terms: Vec<ModTerm>) -> SVec {
        terms.sort_by(|a, b| self.cmp_terms(b, a));
        let mut out: SVec = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.comp == t.comp && last.mono == t.mono => {
                    last.coeff = field.add(last.coeff, t.coeff);
                    if last.coeff == 0 {
                        out.pop();
                    }
                }
                _ if t.coeff == 0 => {}
                _ => out.push(t),
            }
        }
        out
    }

    /// `f + c * m * g`.
    pub fn add_scaled(&self, field: &PrimeField, f: &[ModTerm], c: Coeff, m: &Monomial, g: &[ModTerm]) -> SVec {
        let mut out = Vec::with_capacity(f.len() + g.len());
        let mut gi = g
            .iter()
            .map(|t| ModTerm { mono: t.mono.mul(m), comp: t.comp, coeff: field.mul(t.coeff, c) })
            .peekable();
        let mut fi = f.iter().peekable();
        loop {
            match (fi.peek(), gi.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(fi.next().unwrap().clone()),
                (None, Some(_)) => out.push(gi.next().unwrap()),
                (Some(a), Some(b)) => match self.cmp_terms(a, b) {
                    Ordering::Greater => out.push(fi.next().unwrap().clone()),
                    Ordering::Less => out.push(gi.next().unwrap()),
                    Ordering::Equal => {
                        let a = fi.next().unwrap();
                        let mut b = gi.next().unwrap();
                        b.coeff = field.add(a.coeff, b.coeff);
                        if b.coeff != 0 {
                            out.push(b);
                        }
                    }
                },
            }
        }
        out
    }
}

/// Converts ideal generators into rank-one module elements.
pub fn polys_to_svecs(gens: &[Polynomial]) -> Vec<SVec> {
    gens.iter()
        .map(|g| g.terms().iter().map(|(m, c)| ModTerm { mono: m.clone(), comp: 0, coeff: *c }).collect())
        .collect()
}

/// Reorders Gröbner basis elements so that within each leading component the
/// exponent of variable `var` in the leading monomial is non-increasing. This
/// keeps the variable out of the next level's leading terms and bounds the
/// resolution length by the number of variables.
pub fn sort_for_next_level(elems: &mut [SVec], var: Option<usize>) {
    elems.sort_by(|a, b| {
        let (la, lb) = (&a[0], &b[0]);
        la.comp.cmp(&lb.comp).then_with(|| match var {
            Some(v) if v < la.mono.nvars() => lb.mono.exponent(v).cmp(&la.mono.exponent(v)),
            _ => Ordering::Equal,
        })
    });
}

/// Syzygies of a Gröbner basis `gb` of a submodule of the module ordered by
/// `prev`, expressed in the free module ordered by `prev.induced(lt(gb))`
/// (returned alongside). By Schreyer's theorem the returned elements form a
/// Gröbner basis of the syzygy module; only the pairs whose leading quotients
/// are minimal generators are used.
pub fn schreyer_syzygies(
    field: &PrimeField,
    prev: &SchreyerOrder,
    gb: &[SVec],
    exec: Exec,
) -> Result<(SchreyerOrder, Vec<SVec>), GroebnerError> {
    let leading: Vec<(Monomial, u32)> = gb.iter().map(|v| (v[0].mono.clone(), v[0].comp)).collect();
    let order = prev.induced(&leading);

    let mut by_comp: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (i, (_, c)) in leading.iter().enumerate() {
        by_comp.entry(*c).or_default().push(i);
    }

    let mut pairs: Vec<(usize, usize, Monomial)> = Vec::new();
    for group in by_comp.values() {
        for (pos, &u) in group.iter().enumerate() {
            let au = &leading[u].0;
            let quots: Vec<(usize, Monomial)> =
                group[pos + 1..].iter().map(|&v| (v, au.quotient_of(&au.lcm(&leading[v].0)).unwrap())).collect();
            for (k, (v, q)) in quots.iter().enumerate() {
                let dominated = quots
                    .iter()
                    .enumerate()
                    .any(|(l, (_, q2))| l != k && q2.divides(q) && (q2 != q || l < k));
                if !dominated {
                    pairs.push((u, *v, q.clone()));
                }
            }
        }
    }

    let mut lookup: BTreeMap<u32, Vec<(usize, u64)>> = BTreeMap::new();
    for (i, (m, c)) in leading.iter().enumerate() {
        lookup.entry(*c).or_default().push((i, m.support_mask()));
    }
    let lc_inv: Vec<Coeff> = gb.iter().map(|v| field.inv_nonzero(v[0].coeff)).collect();

    let results = par::map(exec, &pairs, |(u, v, qu)| {
        let (u, v) = (*u, *v);
        let lcm = qu.mul(&leading[u].0);
        let qv = leading[v].0.quotient_of(&lcm).unwrap();
        let cu = lc_inv[u];
        let cv = field.neg(lc_inv[v]);
        let mut quotient: Vec<ModTerm> = vec![
            ModTerm { mono: qu.clone(), comp: u as u32, coeff: cu },
            ModTerm { mono: qv.clone(), comp: v as u32, coeff: cv },
        ];
        let a: SVec = gb[u].iter().map(|t| ModTerm { mono: t.mono.mul(qu), comp: t.comp, coeff: field.mul(t.coeff, cu) }).collect();
        let mut s = prev.add_scaled(field, &a, cv, &qv, &gb[v]);
        while let Some(lt) = s.first() {
            let mask = lt.mono.support_mask();
            let w = lookup.get(&lt.comp).and_then(|cands| {
                cands.iter().find(|(w, mk)| mk & !mask == 0 && leading[*w].0.divides(&lt.mono)).map(|(w, _)| *w)
            });
            let Some(w) = w else {
                return Err(GroebnerError::NotAGroebnerBasis);
            };
            let q = leading[w].0.quotient_of(&lt.mono).unwrap();
            let c = field.mul(lt.coeff, lc_inv[w]);
            s = prev.add_scaled(field, &s, field.neg(c), &q, &gb[w]);
            quotient.push(ModTerm { mono: q, comp: w as u32, coeff: field.neg(c) });
        }
        Ok(order.normalize(field, quotient))
    });
    let syz = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok((order, syz))
}

/// A module element as a sparse vector of polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ModuleElement {
    pub components: BTreeMap<usize, Polynomial>,
}

impl ModuleElement {
    pub fn from_svec(ring: &PolyRing, v: &[ModTerm]) -> Self {
        let mut buckets: BTreeMap<usize, Vec<(Monomial, Coeff)>> = BTreeMap::new();
        for t in v {
            buckets.entry(t.comp as usize).or_default().push((t.mono.clone(), t.coeff));
        }
        let components = buckets
            .into_iter()
            .map(|(k, terms)| (k, ring.from_terms(terms)))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        ModuleElement { components }
    }

    pub fn is_zero(&self) -> bool {
        self.components.values().all(|p| p.is_zero())
    }

    /// `sum_i components[i] * gens[i]`.
    pub fn contract(&self, ring: &PolyRing, gens: &[Polynomial]) -> Polynomial {
        self.components
            .iter()
            .fold(Polynomial::zero(), |acc, (&i, p)| ring.add(&acc, &ring.mul(p, &gens[i])))
    }

    /// Homogeneous with respect to generator shifts `shifts`?
    pub fn is_homogeneous(&self, ring: &PolyRing, shifts: &[i32]) -> bool {
        let mut deg: Option<i32> = None;
        for (&i, p) in &self.components {
            if !ring.is_homogeneous(p) {
                return false;
            }
            let Some(d) = ring.degree(p) else { continue };
            let d = d as i32 + shifts[i];
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return false,
                _ => {}
            }
        }
        true
    }
}

/// First syzygies of the generators of a Gröbner basis, as a Gröbner basis
/// of the syzygy module in the induced Schreyer order. Components index the
/// basis generators in their stored order.
pub fn syzygies(basis: &GroebnerBasis) -> Result<Vec<ModuleElement>, GroebnerError> {
    let ring = basis.ring();
    if !ring.is_standard_graded() || ring.order() != crate::exactalg::MonomialOrder::DegRevLex {
        return Err(GroebnerError::NeedsDegRevLex);
    }
    let gb = polys_to_svecs(basis.generators());
    let base = SchreyerOrder::base(ring.nvars());
    let (_, syz) = schreyer_syzygies(ring.field(), &base, &gb, Exec::default())?;
    Ok(syz.iter().map(|v| ModuleElement::from_svec(ring, v)).collect())
}

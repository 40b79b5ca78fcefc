//! Fusion laws: finite eigenvalue sets with a symmetric rule map, gradings,
//! minors, exactness and the Seress property.
//!
//! The three classical laws (the associative law, the Jordan law `J(eta)` and
//! the Ising law `M(alpha, beta)`) are available as builtins, each carrying
//! its standard sign grading.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::FusionError;
use crate::ratlin::Rat;

/// A fusion law: an ordered list of distinct eigenvalues (always containing 1)
/// and a symmetric rule assigning to each unordered pair a set of eigenvalues.
#[derive(Clone)]
pub struct FusionLaw {
    eigenvalues: Vec<Rat>,
    /// Keyed by index pairs `(i, j)` with `i <= j`; values are index sets.
    /// Absent keys mean the empty set.
    rule: BTreeMap<(usize, usize), BTreeSet<usize>>,
    grading: Option<C2Grading>,
}

/// A sign grading of a fusion law: a partition of the eigenvalues into a plus
/// part (containing 1) and a minus part.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct C2Grading {
    plus: BTreeSet<Rat>,
    minus: BTreeSet<Rat>,
}

impl C2Grading {
    pub fn new(plus: BTreeSet<Rat>, minus: BTreeSet<Rat>) -> Self {
        C2Grading { plus, minus }
    }

    pub fn plus(&self) -> &BTreeSet<Rat> {
        &self.plus
    }

    pub fn minus(&self) -> &BTreeSet<Rat> {
        &self.minus
    }
}

impl FusionLaw {
    /// Builds a law from eigenvalues and value-level rules. The rule list is
    /// symmetrized; entries absent from the list are the empty set.
    pub fn new(
        eigenvalues: Vec<Rat>,
        rules: Vec<((Rat, Rat), Vec<Rat>)>,
    ) -> Result<Self, FusionError> {
        let distinct: BTreeSet<&Rat> = eigenvalues.iter().collect();
        if distinct.len() != eigenvalues.len() || !eigenvalues.contains(&Rat::one()) {
            return Err(FusionError::BadEigenvalues);
        }
        let mut law = FusionLaw {
            eigenvalues,
            rule: BTreeMap::new(),
            grading: None,
        };
        for ((l, m), values) in rules {
            let i = law
                .index_of(&l)
                .ok_or_else(|| FusionError::RuleUnknownEigenvalue(l.to_string()))?;
            let j = law
                .index_of(&m)
                .ok_or_else(|| FusionError::RuleUnknownEigenvalue(m.to_string()))?;
            let mut set = BTreeSet::new();
            for v in values {
                let k = law
                    .index_of(&v)
                    .ok_or_else(|| FusionError::RuleUnknownEigenvalue(v.to_string()))?;
                set.insert(k);
            }
            let key = (i.min(j), i.max(j));
            law.rule.entry(key).or_default().extend(set);
        }
        law.rule.retain(|_, v| !v.is_empty());
        Ok(law)
    }

    pub fn eigenvalues(&self) -> &[Rat] {
        &self.eigenvalues
    }

    pub fn index_of(&self, lambda: &Rat) -> Option<usize> {
        self.eigenvalues.iter().position(|x| x == lambda)
    }

    pub fn contains(&self, lambda: &Rat) -> bool {
        self.index_of(lambda).is_some()
    }

    /// The rule `lambda ⋆ mu` as a set of eigenvalues. Pairs outside the law
    /// yield the empty set.
    pub fn rule(&self, lambda: &Rat, mu: &Rat) -> BTreeSet<Rat> {
        let (Some(i), Some(j)) = (self.index_of(lambda), self.index_of(mu)) else {
            return BTreeSet::new();
        };
        let key = (i.min(j), i.max(j));
        self.rule
            .get(&key)
            .map(|set| set.iter().map(|&k| self.eigenvalues[k].clone()).collect())
            .unwrap_or_default()
    }

    pub fn grading(&self) -> Option<&C2Grading> {
        self.grading.as_ref()
    }

    pub fn with_grading(mut self, g: C2Grading) -> Result<Self, FusionError> {
        if !self.grading_is_partition(&g) {
            return Err(FusionError::BadGradingPartition);
        }
        self.grading = Some(g);
        Ok(self)
    }

    /// The associative law on `{1, 0}`.
    pub fn associative() -> Self {
        let one = Rat::one();
        let zero = Rat::zero();
        let mut law = FusionLaw::new(
            vec![one.clone(), zero.clone()],
            vec![
                ((one.clone(), one.clone()), vec![one.clone()]),
                ((zero.clone(), zero.clone()), vec![zero.clone()]),
            ],
        )
        .expect("builtin law is well formed");
        law.grading = Some(C2Grading::new(
            [one, zero].into_iter().collect(),
            BTreeSet::new(),
        ));
        law
    }

    /// The Jordan law `J(eta)` on `{1, 0, eta}`, graded with minus part
    /// `{eta}`. Requires `eta` distinct from 0 and 1.
    pub fn jordan(eta: &Rat) -> Result<Self, FusionError> {
        if eta.is_zero() || eta.is_one() {
            return Err(FusionError::BadParameter(format!(
                "J(eta) needs eta outside {{0, 1}}, got {eta}"
            )));
        }
        let one = Rat::one();
        let zero = Rat::zero();
        let mut law = FusionLaw::new(
            vec![one.clone(), zero.clone(), eta.clone()],
            vec![
                ((one.clone(), one.clone()), vec![one.clone()]),
                ((one.clone(), eta.clone()), vec![eta.clone()]),
                ((zero.clone(), zero.clone()), vec![zero.clone()]),
                ((zero.clone(), eta.clone()), vec![eta.clone()]),
                ((eta.clone(), eta.clone()), vec![one.clone(), zero.clone()]),
            ],
        )?;
        law.grading = Some(C2Grading::new(
            [one, zero].into_iter().collect(),
            [eta.clone()].into_iter().collect(),
        ));
        Ok(law)
    }

    /// The Ising law `M(alpha, beta)` on `{1, 0, alpha, beta}`, graded with
    /// minus part `{beta}`. Requires `alpha, beta` outside `{0, 1}` and
    /// `alpha != beta`.
    pub fn ising(alpha: &Rat, beta: &Rat) -> Result<Self, FusionError> {
        for p in [alpha, beta] {
            if p.is_zero() || p.is_one() {
                return Err(FusionError::BadParameter(format!(
                    "M(alpha, beta) needs parameters outside {{0, 1}}, got {p}"
                )));
            }
        }
        if alpha == beta {
            return Err(FusionError::BadParameter(
                "M(alpha, beta) needs alpha != beta".into(),
            ));
        }
        let one = Rat::one();
        let zero = Rat::zero();
        let (a, b) = (alpha.clone(), beta.clone());
        let mut law = FusionLaw::new(
            vec![one.clone(), zero.clone(), a.clone(), b.clone()],
            vec![
                ((one.clone(), one.clone()), vec![one.clone()]),
                ((one.clone(), a.clone()), vec![a.clone()]),
                ((one.clone(), b.clone()), vec![b.clone()]),
                ((zero.clone(), zero.clone()), vec![zero.clone()]),
                ((zero.clone(), a.clone()), vec![a.clone()]),
                ((zero.clone(), b.clone()), vec![b.clone()]),
                ((a.clone(), a.clone()), vec![one.clone(), zero.clone()]),
                ((a.clone(), b.clone()), vec![b.clone()]),
                ((b.clone(), b.clone()), vec![one.clone(), zero.clone(), a.clone()]),
            ],
        )?;
        law.grading = Some(C2Grading::new(
            [one, zero, a].into_iter().collect(),
            [b].into_iter().collect(),
        ));
        Ok(law)
    }

    /// The Monster fusion law `M(1/4, 1/32)`.
    pub fn monster() -> Self {
        FusionLaw::ising(&Rat::new(1, 4), &Rat::new(1, 32)).expect("valid parameters")
    }

    /// Restricts the law to `subset`, intersecting every rule with the
    /// subset. Returns the minor and whether it is exact, i.e. whether the
    /// intersection lost nothing on any pair inside the subset.
    pub fn minor(&self, subset: &[Rat]) -> Result<(FusionLaw, bool), FusionError> {
        if !subset.contains(&Rat::one()) {
            return Err(FusionError::MinorMissingOne);
        }
        for lambda in subset {
            if !self.contains(lambda) {
                return Err(FusionError::MinorUnknownEigenvalue(lambda.to_string()));
            }
        }
        let keep: BTreeSet<&Rat> = subset.iter().collect();
        let mut rules = Vec::new();
        let mut exact = true;
        for (i, l) in subset.iter().enumerate() {
            for m in &subset[i..] {
                let full = self.rule(l, m);
                let cut: Vec<Rat> = full.iter().filter(|v| keep.contains(v)).cloned().collect();
                if cut.len() != full.len() {
                    exact = false;
                }
                rules.push(((l.clone(), m.clone()), cut));
            }
        }
        let minor = FusionLaw::new(subset.to_vec(), rules)?;
        Ok((minor, exact))
    }

    /// Seress: 0 is an eigenvalue and `0 ⋆ lambda ⊆ {lambda}` for every
    /// eigenvalue.
    pub fn is_seress(&self) -> bool {
        let zero = Rat::zero();
        if !self.contains(&zero) {
            return false;
        }
        self.eigenvalues.iter().all(|lambda| {
            let products = self.rule(&zero, lambda);
            products.iter().all(|v| v == lambda)
        })
    }

    /// Checks the three sign-pair containments for a candidate grading. The
    /// partition shape itself (disjoint cover with 1 in the plus part) is
    /// also required.
    pub fn validate_grading(&self, g: &C2Grading) -> bool {
        if !self.grading_is_partition(g) {
            return false;
        }
        let closed_into = |xs: &BTreeSet<Rat>, ys: &BTreeSet<Rat>, target: &BTreeSet<Rat>| {
            xs.iter().all(|l| {
                ys.iter()
                    .all(|m| self.rule(l, m).iter().all(|v| target.contains(v)))
            })
        };
        closed_into(&g.plus, &g.plus, &g.plus)
            && closed_into(&g.plus, &g.minus, &g.minus)
            && closed_into(&g.minus, &g.minus, &g.plus)
    }

    /// Validates a grading by an arbitrary finite abelian group `T`, given as
    /// a multiplication table (`table[s][t]` = index of `s·t`) and one
    /// eigenvalue part per group element. A pure check: no automorphisms are
    /// derived from gradings beyond the sign grading.
    pub fn validate_t_grading(&self, table: &[Vec<usize>], parts: &[Vec<Rat>]) -> bool {
        let n = table.len();
        if n == 0 || parts.len() != n || table.iter().any(|row| row.len() != n) {
            return false;
        }
        // abelian latin square with entries in range
        for s in 0..n {
            for t in 0..n {
                if table[s][t] >= n || table[s][t] != table[t][s] {
                    return false;
                }
            }
            let row: BTreeSet<usize> = table[s].iter().copied().collect();
            if row.len() != n {
                return false;
            }
        }
        // parts partition the eigenvalues
        let mut seen = BTreeSet::new();
        for part in parts {
            for lambda in part {
                if !self.contains(lambda) || !seen.insert(lambda.clone()) {
                    return false;
                }
            }
        }
        if seen.len() != self.eigenvalues.len() {
            return false;
        }
        for s in 0..n {
            for t in 0..n {
                let target: BTreeSet<&Rat> = parts[table[s][t]].iter().collect();
                for l in &parts[s] {
                    for m in &parts[t] {
                        if !self.rule(l, m).iter().all(|v| target.contains(v)) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn grading_is_partition(&self, g: &C2Grading) -> bool {
        let all: BTreeSet<Rat> = self.eigenvalues.iter().cloned().collect();
        let union: BTreeSet<Rat> = g.plus.union(&g.minus).cloned().collect();
        union == all
            && g.plus.intersection(&g.minus).next().is_none()
            && g.plus.contains(&Rat::one())
    }
}

/// Laws are compared by their eigenvalue sets and value-level rules; the
/// ordering of the eigenvalue list and any attached grading are not part of
/// the identity of a law.
impl PartialEq for FusionLaw {
    fn eq(&self, other: &Self) -> bool {
        let mine: BTreeSet<&Rat> = self.eigenvalues.iter().collect();
        let theirs: BTreeSet<&Rat> = other.eigenvalues.iter().collect();
        if mine != theirs {
            return false;
        }
        for (i, l) in self.eigenvalues.iter().enumerate() {
            for m in &self.eigenvalues[i..] {
                if self.rule(l, m) != other.rule(l, m) {
                    return false;
                }
            }
        }
        true
    }
}

impl Eq for FusionLaw {}

impl fmt::Debug for FusionLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FusionLaw{{")?;
        let evs: Vec<String> = self.eigenvalues.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]; ", evs.join(", "))?;
        for (i, l) in self.eigenvalues.iter().enumerate() {
            for m in &self.eigenvalues[i..] {
                let set = self.rule(l, m);
                if !set.is_empty() {
                    let vs: Vec<String> = set.iter().map(|x| x.to_string()).collect();
                    write!(f, "{l}*{m}={{{}}} ", vs.join(","))?;
                }
            }
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vals: &[Rat]) -> BTreeSet<Rat> {
        vals.iter().cloned().collect()
    }

    #[test]
    fn associative_law_table() {
        let a = FusionLaw::associative();
        let one = Rat::one();
        let zero = Rat::zero();
        assert_eq!(a.rule(&one, &one), set(&[one.clone()]));
        assert_eq!(a.rule(&zero, &zero), set(&[zero.clone()]));
        assert!(a.rule(&one, &zero).is_empty());
    }

    #[test]
    fn jordan_law_table() {
        let eta = Rat::new(1, 2);
        let j = FusionLaw::jordan(&eta).unwrap();
        let one = Rat::one();
        let zero = Rat::zero();
        assert_eq!(j.rule(&eta, &eta), set(&[one.clone(), zero.clone()]));
        assert_eq!(j.rule(&zero, &eta), set(&[eta.clone()]));
        assert_eq!(j.rule(&one, &eta), set(&[eta.clone()]));
        assert!(j.rule(&one, &zero).is_empty());
    }

    #[test]
    fn jordan_law_rejects_degenerate_eta() {
        assert!(FusionLaw::jordan(&Rat::zero()).is_err());
        assert!(FusionLaw::jordan(&Rat::one()).is_err());
    }

    #[test]
    fn ising_law_table() {
        let m = FusionLaw::monster();
        let one = Rat::one();
        let zero = Rat::zero();
        let alpha = Rat::new(1, 4);
        let beta = Rat::new(1, 32);
        assert_eq!(
            m.rule(&beta, &beta),
            set(&[one.clone(), zero.clone(), alpha.clone()])
        );
        assert_eq!(m.rule(&alpha, &alpha), set(&[one.clone(), zero.clone()]));
        assert_eq!(m.rule(&alpha, &beta), set(&[beta.clone()]));
    }

    #[test]
    fn ising_law_rejects_bad_parameters() {
        let third = Rat::new(1, 3);
        assert!(FusionLaw::ising(&Rat::one(), &third).is_err());
        assert!(FusionLaw::ising(&third, &third).is_err());
    }

    #[test]
    fn minors_of_builtin_laws() {
        let one = Rat::one();
        let zero = Rat::zero();
        let eta = Rat::new(1, 2);
        let j = FusionLaw::jordan(&eta).unwrap();

        let (minor, exact) = j.minor(&[one.clone(), zero.clone()]).unwrap();
        assert!(exact);
        assert_eq!(minor, FusionLaw::associative());

        let alpha = Rat::new(1, 4);
        let beta = Rat::new(1, 32);
        let m = FusionLaw::monster();

        let (minor, exact) = m.minor(&[one.clone(), zero.clone(), alpha.clone()]).unwrap();
        assert!(exact);
        assert_eq!(minor, FusionLaw::jordan(&alpha).unwrap());

        // beta ⋆ beta loses alpha, so this minor is J(beta) but not exact
        let (minor, exact) = m.minor(&[one.clone(), zero.clone(), beta.clone()]).unwrap();
        assert!(!exact);
        assert_eq!(minor, FusionLaw::jordan(&beta).unwrap());
    }

    #[test]
    fn minor_on_full_set_is_identity_and_exact() {
        let j = FusionLaw::jordan(&Rat::new(-1, 3)).unwrap();
        let (minor, exact) = j.minor(j.eigenvalues()).unwrap();
        assert!(exact);
        assert_eq!(minor, j);
    }

    #[test]
    fn minor_requires_one() {
        let j = FusionLaw::jordan(&Rat::new(1, 2)).unwrap();
        assert!(j.minor(&[Rat::zero()]).is_err());
    }

    #[test]
    fn seress_property() {
        assert!(FusionLaw::jordan(&Rat::new(1, 2)).unwrap().is_seress());
        assert!(FusionLaw::monster().is_seress());
        // 0 ⋆ 0 = {1} violates the Seress condition
        let bad = FusionLaw::new(
            vec![Rat::one(), Rat::zero()],
            vec![((Rat::zero(), Rat::zero()), vec![Rat::one()])],
        )
        .unwrap();
        assert!(!bad.is_seress());
        // no 0 at all
        let no_zero = FusionLaw::new(vec![Rat::one()], vec![]).unwrap();
        assert!(!no_zero.is_seress());
    }

    #[test]
    fn grading_validation() {
        let eta = Rat::new(1, 2);
        let j = FusionLaw::jordan(&eta).unwrap();
        assert!(j.validate_grading(j.grading().unwrap()));

        let m = FusionLaw::monster();
        assert!(m.validate_grading(m.grading().unwrap()));

        // {1} / {0, eta} fails: 0 ⋆ 0 = {0} is not in the plus part
        let bad = C2Grading::new(
            set(&[Rat::one()]),
            set(&[Rat::zero(), eta.clone()]),
        );
        assert!(!j.validate_grading(&bad));
    }

    #[test]
    fn t_grading_table_check() {
        let j = FusionLaw::jordan(&Rat::new(1, 2)).unwrap();
        // C2 as a multiplication table reproduces the sign grading
        let table = vec![vec![0, 1], vec![1, 0]];
        let parts = vec![vec![Rat::one(), Rat::zero()], vec![Rat::new(1, 2)]];
        assert!(j.validate_t_grading(&table, &parts));
        // swapped parts break the containments
        let parts_bad = vec![vec![Rat::new(1, 2)], vec![Rat::one(), Rat::zero()]];
        assert!(!j.validate_t_grading(&table, &parts_bad));
    }
}

//! The suite tying the arithmetic side together: the syntactic-congruence
//! formula for progressions, the two/three-way agreement of the
//! preservation checkers with the clause conditions over the corpus, the
//! three lattice claims over all small ultimately periodic sets, and the
//! windowed decrement-lattice conditions.

use crate::fixtures;
use crate::report::{InstanceVerdict, SuiteReport};
use congruence_core::arith::{
    check_clause_a, check_clause_b, check_clause_c, check_cp_nat, check_spp_nat_with,
    theorem_a_lattice_check, LatticeVerdict, NatPreorderFamily,
};
use congruence_core::closure::FamilyElement;
use congruence_core::{latt_suc, syntactic_cong_up, ArithCong, LattVariant, NatFun, UpSet};
use std::collections::HashSet;
use std::time::Instant;

#[derive(Clone, Copy, Debug)]
pub struct NatSuiteConfig {
    pub window: u64,
    pub a_max: u64,
    pub k_max: u64,
    pub claims_bound: u64,
    pub random_count: usize,
    pub seed: u64,
}

impl Default for NatSuiteConfig {
    fn default() -> Self {
        NatSuiteConfig { window: 32, a_max: 6, k_max: 6, claims_bound: 5, random_count: 100, seed: 1 }
    }
}

/// The syntactic congruence of a progression follows the closed formula.
fn syntactic_formula_verdicts(bound: u64, verdicts: &mut Vec<InstanceVerdict>) {
    for a in 0..=bound {
        for k in 1..=bound {
            let got = syntactic_cong_up(&UpSet::progression(a, k));
            let want = ArithCong::pair(a.saturating_sub(k - 1), k);
            let key = format!("syntactic-formula/a={a},k={k}");
            if got == want {
                verdicts.push(InstanceVerdict::pass(key));
            } else {
                verdicts.push(InstanceVerdict::fail(key, format!("got {got}, expected {want}")));
            }
        }
    }
}

/// Congruence preservation on the window must agree with divisibility plus
/// flat growth; preorder preservation with those plus monotonicity.
fn agreement_verdicts(
    corpus: &[NatFun],
    family: &NatPreorderFamily,
    verdicts: &mut Vec<InstanceVerdict>,
) {
    for f in corpus {
        let clause_a = check_clause_a(f).is_none();
        let clause_b_flat = check_clause_b(f, true);
        let clause_c = check_clause_c(f);
        let cp = check_cp_nat(f, family.a_max, family.k_max).expect("window checked").is_none();
        let spp = check_spp_nat_with(f, family).expect("window checked").is_none();
        let dual_key = format!("dual-agreement/{}", f.label());
        if cp == (clause_a && clause_b_flat) {
            verdicts.push(InstanceVerdict::pass(dual_key));
        } else {
            verdicts.push(InstanceVerdict::fail(
                dual_key,
                format!("cp={cp} but clauses a={clause_a}, b-flat={clause_b_flat}"),
            ));
        }
        let triple_key = format!("triple-agreement/{}", f.label());
        if spp == (cp && clause_c) {
            verdicts.push(InstanceVerdict::pass(triple_key));
        } else {
            verdicts.push(InstanceVerdict::fail(
                triple_key,
                format!("spp={spp} but cp={cp}, clause c={clause_c}"),
            ));
        }
    }
}

/// The three claims about decrement lattices of small sets: the empty set
/// arises for finite or properly periodic sets, the naturals arise
/// whenever the set is infinite, and for infinite properly periodic sets
/// the bounds come for free.
fn claims_verdicts(bound: u64, verdicts: &mut Vec<InstanceVerdict>) {
    let mut seen = HashSet::new();
    for a in 0..=bound {
        for k in 1..=bound {
            for fbits in 0..(1u64 << a) {
                for dbits in 0..(1u64 << k) {
                    let set = UpSet::new(
                        a,
                        k,
                        (0..a).filter(|&x| (fbits >> x) & 1 == 1),
                        (0..k).filter(|&r| (dbits >> r) & 1 == 1),
                    );
                    if !seen.insert(set.clone()) {
                        continue;
                    }
                    let plain = latt_suc(&set, LattVariant::Plain);
                    let key_base = format!("claims/{set}");
                    if set.is_finite() || set.period() >= 2 {
                        let ok = plain.contains_set(&UpSet::empty());
                        push_claim(verdicts, format!("{key_base}/empty-member"), ok);
                    }
                    if !set.is_finite() {
                        let ok = plain.contains_set(&UpSet::naturals());
                        push_claim(verdicts, format!("{key_base}/naturals-member"), ok);
                    }
                    if !set.is_finite() && set.period() >= 2 {
                        let bounded = latt_suc(&set, LattVariant::Bounded);
                        let mut a_members = plain.members().to_vec();
                        let mut b_members = bounded.members().to_vec();
                        a_members.sort();
                        b_members.sort();
                        push_claim(
                            verdicts,
                            format!("{key_base}/bounded-equals-plain"),
                            a_members == b_members,
                        );
                    }
                }
            }
        }
    }
}

fn push_claim(verdicts: &mut Vec<InstanceVerdict>, key: String, ok: bool) {
    if ok {
        verdicts.push(InstanceVerdict::pass(key));
    } else {
        verdicts.push(InstanceVerdict::fail(key, "claim violated"));
    }
}

/// Windowed decrement-lattice conditions: functions satisfying all three
/// clauses must be consistent with every tested set; the non-monotone
/// approximant must be refuted by some final segment.
fn lattice_window_verdicts(corpus: &[NatFun], verdicts: &mut Vec<InstanceVerdict>) {
    let test_sets = [
        UpSet::progression(5, 3),
        UpSet::progression(2, 2),
        UpSet::finite_set([0]),
        UpSet::finite_set([1, 4]),
        UpSet::new(3, 2, [1], [0]),
    ];
    for f in corpus {
        let full_conditions = check_clause_a(f).is_none()
            && check_clause_b(f, true)
            && check_clause_c(f);
        if !full_conditions {
            continue;
        }
        let constant = f.values().windows(2).all(|w| w[0] == w[1]);
        for set in &test_sets {
            let key = format!("lattice-window/{}/{}", f.label(), set.render());
            let bounded = theorem_a_lattice_check(f, set, LattVariant::Bounded);
            let plain_ok = constant
                || theorem_a_lattice_check(f, set, LattVariant::Plain)
                    == LatticeVerdict::WindowConsistent;
            if bounded == LatticeVerdict::WindowConsistent && plain_ok {
                verdicts.push(InstanceVerdict::pass(key));
            } else {
                verdicts.push(InstanceVerdict::fail(
                    key,
                    "preimage of a recognizable set escaped the decrement lattice",
                ));
            }
        }
    }
    // the pinned refutation: cutting a final segment at an even-step value
    // of the non-monotone approximant
    let g = congruence_core::arith::zigzag_g(24);
    let refuted = (0..4u64).any(|p| {
        let cut = u64::try_from(g.value(2 * p)).expect("zigzag window values fit u64");
        theorem_a_lattice_check(&g, &UpSet::final_segment(cut), LattVariant::Bounded)
            == LatticeVerdict::WindowRefuted
    });
    if refuted {
        verdicts.push(InstanceVerdict::pass("lattice-window/zigzag_g/refutation-witness"));
    } else {
        verdicts.push(InstanceVerdict::fail(
            "lattice-window/zigzag_g/refutation-witness",
            "no final segment refuted the non-monotone approximant",
        ));
    }
}

pub fn run(config: NatSuiteConfig) -> SuiteReport {
    let start = Instant::now();
    let mut verdicts = Vec::new();
    syntactic_formula_verdicts(config.a_max, &mut verdicts);
    let corpus = fixtures::corpus(config.window, config.random_count, config.seed);
    let family = NatPreorderFamily::new(config.a_max, config.k_max);
    agreement_verdicts(&corpus, &family, &mut verdicts);
    claims_verdicts(config.claims_bound, &mut verdicts);
    lattice_window_verdicts(&corpus, &mut verdicts);
    SuiteReport::new("nat", Some(config.seed), Some(config.a_max), verdicts, start.elapsed())
}

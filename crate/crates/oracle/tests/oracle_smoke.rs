//! Every catalog entry verifies cleanly at small bounds on the standard
//! profiles, reports are deterministic, and the budget guard refuses
//! oversized runs instead of sampling.

use bicat_core::Involution;
use bicat_oracle::{profiles, verify, Bounds, OracleError, Status, TheoremId};

fn small_bounds() -> Bounds {
    Bounds {
        word_len: 3,
        triple_len: 2,
        lang_word_len: 2,
        exponent: 2,
        closure_len: 5,
        budget: 100_000_000,
    }
}

#[test]
fn catalog_ids_are_stable() {
    let ids: Vec<&str> = TheoremId::ALL.iter().map(|t| t.id()).collect();
    assert_eq!(ids.len(), 32);
    for id in &ids {
        assert_eq!(TheoremId::parse(id).map(|t| t.id()), Some(*id));
    }
    assert_eq!(TheoremId::parse("nosuch"), None);
}

#[test]
fn all_theorems_pass_on_swap_profile() {
    let theta = profiles::ab_swap();
    let bounds = small_bounds();
    for theorem in TheoremId::ALL {
        let report = verify(theorem, &theta, &bounds)
            .unwrap_or_else(|e| panic!("{} failed: {e}", theorem.id()));
        assert_eq!(
            report.status(),
            Status::AllPass,
            "{}:\n{}",
            theorem.id(),
            report.render()
        );
        assert!(report.cases_checked > 0, "{} checked nothing", theorem.id());
    }
}

#[test]
fn all_theorems_pass_on_identity_profile() {
    let theta = profiles::ab_identity();
    let bounds = small_bounds();
    for theorem in TheoremId::ALL {
        let report = verify(theorem, &theta, &bounds)
            .unwrap_or_else(|e| panic!("{} failed: {e}", theorem.id()));
        assert_eq!(
            report.status(),
            Status::AllPass,
            "{}:\n{}",
            theorem.id(),
            report.render()
        );
    }
}

#[test]
fn morphic_profile_rejected_where_antimorphic_required() {
    let mu = Involution::parse_inline("a<->b morphic").unwrap();
    let err = verify(TheoremId::Mr1, &mu, &small_bounds()).unwrap_err();
    assert!(matches!(
        err,
        OracleError::Core(bicat_core::Error::KindMismatch)
    ));
    // but the kind-agnostic routines accept it
    let report = verify(TheoremId::BicatPhiClosure, &mu, &small_bounds()).unwrap();
    assert_eq!(report.status(), Status::AllPass);
}

#[test]
fn reports_are_deterministic() {
    let theta = profiles::ab_swap();
    let bounds = small_bounds();
    for theorem in [
        TheoremId::Mr1,
        TheoremId::Pcj3,
        TheoremId::Teq1,
        TheoremId::BwProperties,
    ] {
        let a = verify(theorem, &theta, &bounds).unwrap().render();
        let b = verify(theorem, &theta, &bounds).unwrap().render();
        assert_eq!(a, b, "{} not deterministic", theorem.id());
    }
}

#[test]
fn budget_refuses_instead_of_sampling() {
    let theta = profiles::ab_swap();
    let bounds = Bounds {
        budget: 10,
        ..small_bounds()
    };
    let err = verify(TheoremId::Mr1, &theta, &bounds).unwrap_err();
    assert!(matches!(err, OracleError::BudgetExceeded { .. }));
}

#[test]
fn dna_bw_properties_finds_known_witnesses() {
    let dna = Involution::dna();
    let bounds = Bounds {
        word_len: 4,
        ..small_bounds()
    };
    let report = verify(TheoremId::BwProperties, &dna, &bounds).unwrap();
    assert_eq!(report.status(), Status::AllPass);
    let text = report.render();
    assert!(text.contains("u=ATC v=GCTA w=GATGCTA letter=G"), "{text}");
    assert!(text.contains("u=AG v=CA w=AC: CACTAC"), "{text}");
}

use curvelink::liaison::Certificate;
use curvelink::pipelines::{run, PipelineConfig, PipelineId};
use curvelink::Error;

#[test]
fn config_validation() {
    assert!(PipelineConfig::new(PipelineId::Genus14).with_prime(4).is_err());
    assert!(PipelineConfig::new(PipelineId::Genus14).with_prime(31991).is_ok());
    assert!(matches!(PipelineConfig::new(PipelineId::Genus14).with_retries(0), Err(Error::Precondition(_))));
    for id in PipelineId::ALL {
        assert_eq!(id.name().parse::<PipelineId>().unwrap(), id);
    }
    assert!(matches!("genus10".parse::<PipelineId>(), Err(Error::Parse(_))));
}

#[test]
fn certificates_are_deterministic_and_round_trip() {
    let cfg = PipelineConfig::new(PipelineId::Grassmann8).with_seed(4);
    let a = run(&cfg);
    let b = run(&cfg);
    assert!(a.pass, "{}", a.table());
    assert_eq!(a.to_json(), b.to_json());
    let back = Certificate::from_json(&a.to_json()).unwrap();
    assert_eq!(back, a);
    assert!(back.inconsistencies().is_empty());
    assert!(a.diverging_claims(&b).is_empty());
    let other = run(&cfg.clone().with_seed(5));
    assert_ne!(other.to_json(), a.to_json());
}

#[test]
fn genus14_and_genus12_share_the_surface() {
    let dir = tempfile::tempdir().unwrap();
    for id in [PipelineId::Genus14, PipelineId::Genus12] {
        let cert = run(&PipelineConfig::new(id).with_seed(3).with_dump_dir(dir.path()));
        assert!(cert.pass, "{}", cert.table());
        assert_eq!(cert.claim("dim I_X in degree 2").unwrap().computed, 5);
    }
    let x14 = std::fs::read_to_string(dir.path().join("genus14-X.ideal")).unwrap();
    let x12 = std::fs::read_to_string(dir.path().join("genus12-X.ideal")).unwrap();
    assert_eq!(x14, x12);
}

#[test]
fn exhausted_budget_names_the_failing_condition() {
    // a field too small for eleven points in general position with the required genericity
    let cert = run(&PipelineConfig::new(PipelineId::Genus14).with_prime(3).unwrap().with_retries(2).unwrap());
    assert!(!cert.pass);
    assert_eq!(cert.retries, 1);
    assert!(cert.notes.iter().any(|n| n.contains("first unsatisfied condition")), "{:?}", cert.notes);
    assert!(cert.inconsistencies().is_empty());
}

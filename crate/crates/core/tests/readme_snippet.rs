use multifol::multifoliate::MultifoliateStructure;
use multifol::poset::Poset;

#[test]
fn readme_example_holds() {
    let chain = Poset::of(&["a", "b"], &[("a", "b")]).unwrap();
    let s = MultifoliateStructure::of(chain, &["a", "a", "b"]).unwrap();

    let sys = s.system();
    assert!(sys.is_complete().unwrap());
    let back = multifol::classify::classify(&sys).unwrap();
    assert!(s.equivalent(&back.structure).unwrap().is_some());
}

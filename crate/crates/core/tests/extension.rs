use selfdual::analysis::{analyze, AnalysisOptions, CodeType, Family};
use selfdual::extension::{expand_x, extend, gray_image};
use selfdual::lift::{complete_lower, decode_upper};
use selfdual::tables::{lift_row, TABLE3};
use selfdual::Error;

fn gray_of(name: &str) -> selfdual::BinaryCode {
    let row = lift_row(name).unwrap();
    let k = complete_lower(&decode_upper(row.hex).unwrap(), &row.base.matrix()).unwrap();
    gray_image(&k[0].k).unwrap()
}

#[test]
fn c9_extension_reaches_beta_41() {
    let row = TABLE3.iter().find(|r| r.name == "C9").unwrap();
    let g = gray_of(row.base);
    let x = expand_x(row.x, 64).unwrap();
    let c = extend(&g, &x).unwrap();
    assert!(c.is_self_dual());
    let r = analyze(&c, &AnalysisOptions::default()).unwrap();
    assert_eq!((r.n, r.k, r.d), (66, 33, Some(12)));
    assert_eq!(r.code_type, Some(CodeType::I));
    assert_eq!((r.family, r.beta), (Some(Family::W66_3), Some(41)));
    assert_eq!(r.a12_pair, Some(6879));
}

#[test]
fn even_weight_vectors_are_rejected() {
    let g = gray_of("K3");
    let x = expand_x("1^{2} 0^{62}", 64).unwrap();
    assert!(matches!(extend(&g, &x), Err(Error::EvenWeightX(_))));
}

#[test]
fn extension_vectors_have_the_right_length() {
    for row in TABLE3 {
        assert_eq!(expand_x(row.x, 64).unwrap().len(), 64, "{}", row.name);
    }
    assert!(expand_x("0^{63}", 64).is_err());
}

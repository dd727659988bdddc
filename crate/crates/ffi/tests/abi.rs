use std::ffi::{CStr, CString};
use std::ptr;

use nclattice_ffi::*;

fn take(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { nc_string_free(s) };
    text
}

fn last_error() -> String {
    let p = nc_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn standard(family: &str, m: usize, n: usize) -> *mut NcConfig {
    let f = CString::new(family).unwrap();
    let mut config = ptr::null_mut();
    assert_eq!(unsafe { nc_config_standard(f.as_ptr(), m, n, &mut config) }, NcStatus::Ok);
    config
}

#[test]
fn lattice_round_trip() {
    let config = standard("U", 2, 2);
    let mut lattice = ptr::null_mut();
    unsafe {
        assert_eq!(nc_lattice_build(config, 12, &mut lattice), NcStatus::Ok);
        let mut len = 0;
        assert_eq!(nc_lattice_len(lattice, &mut len), NcStatus::Ok);
        assert_eq!(len, 14);

        let mut needed = 0;
        assert_eq!(nc_lattice_rank_vector(lattice, ptr::null_mut(), 0, &mut needed), NcStatus::Ok);
        let mut ranks = vec![0u64; needed];
        assert_eq!(nc_lattice_rank_vector(lattice, ranks.as_mut_ptr(), needed, &mut needed), NcStatus::Ok);
        assert_eq!(ranks.iter().sum::<u64>(), 14);
        assert!(ranks.iter().eq(ranks.iter().rev()));

        let mut out = ptr::null_mut();
        assert_eq!(nc_lattice_to_dot(lattice, &mut out), NcStatus::Ok);
        assert!(take(out).starts_with("digraph"));
        assert_eq!(nc_lattice_to_json(lattice, &mut out), NcStatus::Ok);
        assert!(take(out).contains("\"covers\""));

        assert_eq!(nc_config_count(config, 12, &mut out), NcStatus::Ok);
        assert_eq!(take(out), "14");

        nc_lattice_free(lattice);
        nc_config_free(config);
    }
}

#[test]
fn json_config_and_errors() {
    let good = CString::new(r#"{"points": [[0, 0], [1, 0], ["1/2", 1]]}"#).unwrap();
    let bad = CString::new(r#"{"points": [[0, 0], [0, 0]]}"#).unwrap();
    let mut config = ptr::null_mut();
    unsafe {
        assert_eq!(nc_config_from_json(good.as_ptr(), &mut config), NcStatus::Ok);
        let mut n = 0;
        assert_eq!(nc_config_len(config, &mut n), NcStatus::Ok);
        assert_eq!(n, 3);
        let mut out = ptr::null_mut();
        assert_eq!(nc_config_to_json(config, &mut out), NcStatus::Ok);
        assert!(take(out).contains("1/2"));
        nc_config_free(config);

        let mut other = ptr::null_mut();
        assert_eq!(nc_config_from_json(bad.as_ptr(), &mut other), NcStatus::Parse);
        assert!(other.is_null());
        assert!(last_error().contains("duplicate"));

        assert_eq!(nc_config_from_json(ptr::null(), &mut other), NcStatus::NullPointer);
        let w = CString::new("W").unwrap();
        assert_eq!(nc_config_standard(w.as_ptr(), 1, 1, &mut other), NcStatus::InvalidArgument);

        let big = standard("Q", 13, 0);
        let mut lattice = ptr::null_mut();
        assert_eq!(nc_lattice_build(big, 12, &mut lattice), NcStatus::TooLarge);
        nc_config_free(big);

        // success clears the previous message
        let mut len = 0;
        let small = standard("P", 3, 0);
        assert_eq!(nc_config_len(small, &mut len), NcStatus::Ok);
        assert!(nc_last_error().is_null());
        nc_config_free(small);
    }
}

#[test]
fn ungraded_lattice_reports_status() {
    let json = CString::new(include_str!("../../core/fixtures/triangle-upright-inner.json")).unwrap();
    let mut config = ptr::null_mut();
    let mut lattice = ptr::null_mut();
    unsafe {
        assert_eq!(nc_config_from_json(json.as_ptr(), &mut config), NcStatus::Ok);
        assert_eq!(nc_lattice_build(config, 12, &mut lattice), NcStatus::Ok);
        let mut len = 0;
        assert_eq!(nc_lattice_rank_vector(lattice, ptr::null_mut(), 0, &mut len), NcStatus::NotGraded);
        nc_lattice_free(lattice);
        nc_config_free(config);
    }
}

#[test]
fn tables_scd_and_duality() {
    unsafe {
        let s = CString::new("S").unwrap();
        let mut out = ptr::null_mut();
        assert_eq!(nc_table_csv(s.as_ptr(), 2, 2, &mut out), NcStatus::Ok);
        assert!(take(out).lines().any(|l| l == "1,4,12,37"));

        let (mut chains, mut covered) = (0, 0);
        assert_eq!(nc_scd_summary(s.as_ptr(), 1, 2, 12, &mut chains, &mut covered), NcStatus::Ok);
        assert_eq!(covered, 37);
        assert!(chains > 0);

        let q = CString::new("Q").unwrap();
        assert_eq!(nc_table_csv(q.as_ptr(), 2, 2, &mut out), NcStatus::InvalidArgument);

        let config = standard("U", 1, 4);
        let mut lattice = ptr::null_mut();
        assert_eq!(nc_lattice_build(config, 12, &mut lattice), NcStatus::Ok);
        let mut dual = true;
        assert_eq!(nc_lattice_is_self_dual(lattice, 0, &mut dual), NcStatus::Ok);
        assert!(!dual);
        nc_lattice_free(lattice);
        nc_config_free(config);
    }
}

#[test]
fn null_handles_are_rejected() {
    let mut n = 0;
    unsafe {
        assert_eq!(nc_config_len(ptr::null(), &mut n), NcStatus::NullPointer);
        assert_eq!(nc_lattice_len(ptr::null(), &mut n), NcStatus::NullPointer);
        nc_config_free(ptr::null_mut());
        nc_lattice_free(ptr::null_mut());
        nc_string_free(ptr::null_mut());
    }
}

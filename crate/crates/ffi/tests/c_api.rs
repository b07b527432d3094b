use std::ffi::{c_char, CStr, CString};
use std::ptr;

use thompson_stab_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

/// Takes ownership of a library string.
unsafe fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let owned = CStr::from_ptr(s).to_str().unwrap().to_owned();
    fs_string_free(s);
    owned
}

unsafe fn last_error() -> String {
    let p = fs_last_error_message();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_str().unwrap().to_owned()
}

unsafe fn point(s: &str) -> *mut FsPoint {
    let mut p = ptr::null_mut();
    assert_eq!(fs_point_parse(cstr(s).as_ptr(), &mut p), FsStatus::Ok);
    p
}

unsafe fn word(s: &str) -> *mut FsWord {
    let mut w = ptr::null_mut();
    assert_eq!(fs_word_parse(cstr(s).as_ptr(), &mut w), FsStatus::Ok);
    w
}

#[test]
fn point_round_trip_and_action() {
    unsafe {
        let p = point("10(0100)");
        assert_eq!(take(fs_point_to_string(p)), "1(0010)");
        assert_eq!(take(fs_point_value(p)), "17/30");

        let a = word("a");
        let mut q = ptr::null_mut();
        assert_eq!(fs_point_act(p, a, &mut q), FsStatus::Ok);
        assert_eq!(take(fs_point_to_string(q)), "01(0100)");

        let r = point("0(1000)");
        let s = point("4/15");
        assert!(fs_point_equal(r, s));
        assert!(!fs_point_equal(p, s));

        for h in [p, q, r, s] {
            fs_point_free(h);
        }
        fs_word_free(a);
    }
}

#[test]
fn parse_errors_set_status_and_message() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(fs_point_parse(cstr("10()").as_ptr(), &mut p), FsStatus::Parse);
        assert!(p.is_null());
        assert!(!last_error().is_empty());

        let mut w = ptr::null_mut();
        assert_eq!(fs_word_parse(cstr("abx").as_ptr(), &mut w), FsStatus::Parse);
        assert!(!last_error().is_empty());

        assert_eq!(fs_point_parse(ptr::null(), &mut p), FsStatus::NullPointer);
        assert_eq!(fs_point_parse(cstr("0").as_ptr(), ptr::null_mut()), FsStatus::NullPointer);

        let bad = [0xffu8, 0];
        assert_eq!(fs_word_parse(bad.as_ptr().cast(), &mut w), FsStatus::InvalidUtf8);
    }
}

#[test]
fn maps_compose_invert_and_flip() {
    unsafe {
        let w = word("aB");
        let mut m = ptr::null_mut();
        assert_eq!(fs_word_to_map(w, &mut m), FsStatus::Ok);
        let mut inv = ptr::null_mut();
        assert_eq!(fs_map_inverse(m, &mut inv), FsStatus::Ok);
        let mut prod = ptr::null_mut();
        assert_eq!(fs_map_compose(m, inv, &mut prod), FsStatus::Ok);
        assert!(fs_map_is_identity(prod));
        assert!(!fs_map_is_identity(m));

        let mut flipped = ptr::null_mut();
        let mut back = ptr::null_mut();
        assert_eq!(fs_map_phi(m, &mut flipped), FsStatus::Ok);
        assert_eq!(fs_map_phi(flipped, &mut back), FsStatus::Ok);
        assert!(fs_map_equal(m, back));

        let a = word("a");
        let mut x0 = ptr::null_mut();
        assert_eq!(fs_word_to_map(a, &mut x0), FsStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(fs_map_eval(x0, cstr("1/2").as_ptr(), &mut out), FsStatus::Ok);
        assert_eq!(take(out), "1/4");
        assert_eq!(fs_map_eval(x0, cstr("1/3").as_ptr(), &mut out), FsStatus::Ok);
        assert_eq!(take(out), "1/6");
        assert_eq!(fs_map_eval(x0, cstr("3/2").as_ptr(), &mut out), FsStatus::Domain);
        assert_eq!(fs_map_eval(x0, cstr("half").as_ptr(), &mut out), FsStatus::Parse);
        assert!(take(fs_map_to_string(x0)).contains("1/2"));

        for h in [m, inv, prod, flipped, back, x0] {
            fs_map_free(h);
        }
        fs_word_free(w);
        fs_word_free(a);
    }
}

#[test]
fn graph_and_path() {
    unsafe {
        let half = point("1/2");
        let mut dot = ptr::null_mut();
        assert_eq!(fs_graph_dot(half, 2, 1000, &mut dot), FsStatus::Ok);
        let dot = take(dot);
        assert!(dot.starts_with("digraph schreier {\n"));
        assert!(dot.contains("\"1(0)\" [peripheries=2];"));

        let mut json = ptr::null_mut();
        assert_eq!(fs_graph_json(half, 2, 1000, &mut json), FsStatus::Ok);
        assert!(take(json).contains("\"radius\": 2"));

        let mut big = ptr::null_mut();
        assert_eq!(fs_graph_dot(half, 8, 3, &mut big), FsStatus::Capacity);
        assert!(big.is_null());

        let from = point("4/15");
        let to = point("10(0100)");
        let mut h = ptr::null_mut();
        assert_eq!(fs_path_find(from, to, 0, &mut h), FsStatus::Ok);
        let mut moved = ptr::null_mut();
        assert_eq!(fs_point_act(from, h, &mut moved), FsStatus::Ok);
        assert!(fs_point_equal(moved, to));

        let left = point("1(0)");
        let right = point("0(1)");
        let mut none = ptr::null_mut();
        assert_eq!(fs_path_find(left, right, 4, &mut none), FsStatus::NotFound);
        assert!(none.is_null());

        for p in [half, from, to, moved, left, right] {
            fs_point_free(p);
        }
        fs_word_free(h);
    }
}

#[test]
fn generators_verify() {
    unsafe {
        let p = point("4/15");
        let mut g = ptr::null_mut();
        assert_eq!(fs_gens_compute(p, 0, &mut g), FsStatus::Ok);
        assert_eq!(fs_gens_count(g), 5);
        let text = take(fs_gens_to_text(g));
        assert!(text.starts_with("# point=(0100) h="));

        for i in 0..5 {
            let mut s = ptr::null_mut();
            assert_eq!(fs_gens_generator(g, i, &mut s), FsStatus::Ok);
            let mut image = ptr::null_mut();
            assert_eq!(fs_point_act(p, s, &mut image), FsStatus::Ok);
            assert!(fs_point_equal(image, p));
            fs_point_free(image);
            fs_word_free(s);
        }
        let mut s = ptr::null_mut();
        assert_eq!(fs_gens_generator(g, 5, &mut s), FsStatus::InvalidArgument);

        let mut h = ptr::null_mut();
        assert_eq!(fs_gens_conjugator(g, &mut h), FsStatus::Ok);
        assert!(fs_word_len(h) > 0);

        let mut passed = false;
        assert_eq!(fs_gens_verify(g, 20, 6, 0, &mut passed), FsStatus::Ok);
        assert!(passed);

        let zero = point("0");
        let mut all = ptr::null_mut();
        assert_eq!(fs_gens_compute(zero, 0, &mut all), FsStatus::Ok);
        assert_eq!(fs_gens_count(all), 2);

        fs_gens_free(g);
        fs_gens_free(all);
        fs_word_free(h);
        fs_point_free(p);
        fs_point_free(zero);
    }
}

#[test]
fn selftest_and_status_names() {
    unsafe {
        let mut passed = false;
        assert_eq!(fs_selftest(3, &mut passed), FsStatus::Ok);
        assert!(passed);
        assert_eq!(fs_selftest(1, &mut passed), FsStatus::InvalidArgument);
        let name = CStr::from_ptr(fs_status_name(FsStatus::NotFound)).to_str().unwrap();
        assert_eq!(name, "not found");
    }
}

#[test]
fn null_handles_are_tolerated() {
    unsafe {
        fs_point_free(ptr::null_mut());
        fs_word_free(ptr::null_mut());
        fs_map_free(ptr::null_mut());
        fs_gens_free(ptr::null_mut());
        fs_string_free(ptr::null_mut());
        assert!(fs_point_to_string(ptr::null()).is_null());
        assert_eq!(fs_gens_count(ptr::null()), 0);
        assert!(!fs_map_is_identity(ptr::null()));
        let mut out = ptr::null_mut();
        assert_eq!(fs_word_to_map(ptr::null(), &mut out), FsStatus::NullPointer);
    }
}

use std::ffi::{CStr, CString};
use std::ptr;
use vkh_ffi::*;

fn parse(code: &str) -> *mut VkhDiagram {
    let c = CString::new(code).unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(
        unsafe { vkh_diagram_parse(c.as_ptr(), &mut d) },
        VkhStatus::Ok
    );
    assert!(!d.is_null());
    d
}

fn take(s: *mut std::ffi::c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { vkh_string_free(s) };
    out
}

#[test]
fn left_trefoil_round_trip() {
    let d = parse("O1-U2-O3-U1-O2-U3-");
    unsafe {
        assert_eq!(vkh_diagram_crossings(d), 3);
        let (mut a, mut b) = (0i64, 0i64);
        assert_eq!(vkh_signatures(d, &mut a, &mut b), VkhStatus::Ok);
        assert_eq!((a, b), (2, 2));
        let mut s = 0i64;
        assert_eq!(vkh_rasmussen(d, &mut s), VkhStatus::Ok);
        assert_eq!(s, -2);
        let mut g = 9usize;
        assert_eq!(vkh_genus(d, &mut g), VkhStatus::Ok);
        assert_eq!(g, 0);
        let mut p = ptr::null_mut();
        assert_eq!(vkh_khovanov(d, &mut p), VkhStatus::Ok);
        assert_eq!(take(p), "1/q^9t^3+1/q^5t^2+1/q^3+1/q");
        assert_eq!(vkh_bracket(d, &mut p), VkhStatus::Ok);
        assert_eq!(take(p), "-q^-9+q^-5+q^-3+q^-1");
        assert_eq!(vkh_diagram_code(d, &mut p), VkhStatus::Ok);
        assert_eq!(take(p), "O1-U2-O3-U1-O2-U3-");
        assert_eq!(vkh_invariants_json(d, &mut p), VkhStatus::Ok);
        let json = take(p);
        assert!(json.contains("\"rasmussen\":-2"), "{json}");
        vkh_diagram_free(d);
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    let c = CString::new("O1+U2").unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(
        unsafe { vkh_diagram_parse(c.as_ptr(), &mut d) },
        VkhStatus::Parse
    );
    assert!(d.is_null());
    let msg = unsafe { CStr::from_ptr(vkh_last_error()) }
        .to_str()
        .unwrap();
    assert!(msg.contains("malformed"), "{msg}");

    let v = parse("O1+O2+U1+U2+");
    let (mut a, mut b) = (0i64, 0i64);
    assert_eq!(
        unsafe { vkh_signatures(v, &mut a, &mut b) },
        VkhStatus::NotColorable
    );
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { vkh_khovanov(v, &mut p) }, VkhStatus::Ok);
    assert_eq!(take(p), "q+q^3+q^2t+q^6t^2");
    unsafe { vkh_diagram_free(v) };

    let h = parse("O1+U2+;U1+O2+");
    let mut s = 0i64;
    assert_eq!(unsafe { vkh_rasmussen(h, &mut s) }, VkhStatus::NotAKnot);
    unsafe { vkh_diagram_free(h) };
}

#[test]
fn null_pointers_are_rejected() {
    let mut s = 0i64;
    assert_eq!(
        unsafe { vkh_rasmussen(ptr::null(), &mut s) },
        VkhStatus::NullPointer
    );
    let d = parse("O1-U2-O3-U1-O2-U3-");
    assert_eq!(
        unsafe { vkh_rasmussen(d, ptr::null_mut()) },
        VkhStatus::NullPointer
    );
    assert_eq!(unsafe { vkh_diagram_crossings(ptr::null()) }, 0);
    unsafe {
        vkh_diagram_free(d);
        vkh_diagram_free(ptr::null_mut());
        vkh_string_free(ptr::null_mut());
    }
    let msg = unsafe { CStr::from_ptr(vkh_status_str(VkhStatus::NotColorable)) };
    assert_eq!(
        msg.to_str().unwrap(),
        "diagram is not checkerboard colorable"
    );
}

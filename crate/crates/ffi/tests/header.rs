use std::io::Write;
use std::path::Path;
use std::process::{Command, Stdio};

const SMOKE: &str = r#"
#include "vkh.h"
int smoke(void) {
    VkhDiagram *d = NULL;
    if (vkh_diagram_parse("O1-U2-O3-U1-O2-U3-", &d) != VKH_STATUS_OK) return 1;
    int64_t s = 0;
    enum VkhStatus st = vkh_rasmussen(d, &s);
    char *kh = NULL;
    vkh_khovanov(d, &kh);
    vkh_string_free(kh);
    vkh_diagram_free(d);
    return st == VKH_STATUS_OK && s == -2 ? 0 : 2;
}
"#;

#[test]
fn header_declares_the_api() {
    let h = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/vkh.h"))
        .unwrap();
    for sym in [
        "typedef struct VkhDiagram VkhDiagram;",
        "VKH_STATUS_NOT_COLORABLE = 5",
        "vkh_diagram_parse(const char *code, struct VkhDiagram **out)",
        "void vkh_string_free(char *s)",
        "const char *vkh_last_error(void)",
    ] {
        assert!(h.contains(sym), "missing {sym}");
    }
}

#[test]
fn header_compiles_as_c() {
    let Ok(mut child) = Command::new("cc")
        .args([
            "-fsyntax-only",
            "-Wall",
            "-Werror",
            "-Iinclude",
            "-x",
            "c",
            "-",
        ])
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .stdin(Stdio::piped())
        .spawn()
    else {
        eprintln!("no C compiler on PATH, skipping");
        return;
    };
    child
        .stdin
        .take()
        .unwrap()
        .write_all(SMOKE.as_bytes())
        .unwrap();
    assert!(child.wait().unwrap().success());
}

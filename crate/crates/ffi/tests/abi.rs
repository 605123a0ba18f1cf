use std::ffi::{c_int, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use antipath_ffi::*;

fn new_graph(n: usize, arcs: &[(usize, usize)]) -> *mut ApGraph {
    let g = ap_graph_new(n);
    for &(u, v) in arcs {
        assert_eq!(unsafe { ap_graph_add_arc(g, u, v) }, ApStatus::Ok);
    }
    g
}

#[test]
fn graph_lifecycle_and_arc_errors() {
    let g = new_graph(4, &[(0, 1), (2, 1)]);
    unsafe {
        assert_eq!(ap_graph_vertex_count(g), 4);
        assert_eq!(ap_graph_arc_count(g), 2);
        assert!(ap_graph_has_arc(g, 0, 1));
        assert!(!ap_graph_has_arc(g, 1, 0));
        assert_eq!(ap_graph_add_arc(g, 3, 3), ApStatus::SelfLoop);
        assert_eq!(ap_graph_add_arc(g, 0, 1), ApStatus::DuplicateArc);
        assert_eq!(ap_graph_add_arc(g, 1, 0), ApStatus::AntiparallelArc);
        assert_eq!(ap_graph_add_arc(g, 0, 9), ApStatus::VertexOutOfRange);
        assert_eq!(ap_graph_arc_count(g), 2);
        ap_graph_free(g);
        ap_graph_free(ptr::null_mut());
    }
}

#[test]
fn null_handles_are_rejected() {
    let mut len = 0usize;
    unsafe {
        assert_eq!(
            ap_graph_add_arc(ptr::null_mut(), 0, 1),
            ApStatus::NullPointer
        );
        assert_eq!(ap_graph_vertex_count(ptr::null()), 0);
        assert_eq!(
            ap_longest_antipath(ptr::null(), ptr::null_mut(), 0, &mut len, ptr::null_mut()),
            ApStatus::NullPointer
        );
        assert_eq!(
            ap_cycle_blowup(3, 1, ptr::null_mut()),
            ApStatus::NullPointer
        );
        assert!(ap_graph_to_dot(ptr::null(), ptr::null(), 0).is_null());
    }
}

#[test]
fn parse_reports_line() {
    let mut g = ptr::null_mut();
    let mut line = 0usize;
    let good = CString::new("3 2\n0 1\n2 1\n").unwrap();
    let bad = CString::new("3 2\n0 1\n1 0\n").unwrap();
    unsafe {
        assert_eq!(
            ap_graph_parse_edge_list(good.as_ptr(), &mut g, &mut line),
            ApStatus::Ok
        );
        assert_eq!(ap_graph_arc_count(g), 2);
        let text = ap_graph_to_edge_list(g);
        assert_eq!(CStr::from_ptr(text).to_str().unwrap(), "3 2\n0 1\n2 1\n");
        ap_string_free(text);
        ap_graph_free(g);

        let mut g = ptr::null_mut();
        assert_eq!(
            ap_graph_parse_edge_list(bad.as_ptr(), &mut g, &mut line),
            ApStatus::ParseError
        );
        assert_eq!(line, 3);
        assert!(g.is_null());
    }
}

#[test]
fn blowup_degrees_and_longest() {
    let mut g = ptr::null_mut();
    let (mut semi, mut pd) = (0usize, 0usize);
    let mut buf = [0usize; 16];
    let mut len = 0usize;
    let mut fwd: c_int = -1;
    unsafe {
        assert_eq!(ap_cycle_blowup(3, 3, &mut g), ApStatus::Ok);
        assert_eq!(ap_graph_degree_stats(g, &mut semi, &mut pd), ApStatus::Ok);
        assert_eq!((semi, pd), (3, 3));
        assert_eq!(
            ap_longest_antipath(g, buf.as_mut_ptr(), 16, &mut len, &mut fwd),
            ApStatus::Ok
        );
        // k = 6 blow-up: longest antipath has k - 1 = 5 arcs.
        assert_eq!(len, 6);
        assert!(fwd == 0 || fwd == 1);
        assert_eq!(ap_validate_antipath(g, buf.as_ptr(), len), ApStatus::Ok);
        for shape in [-1, 0, 1] {
            assert_eq!(
                ap_find_antipath(g, 6, shape, buf.as_mut_ptr(), 16, &mut len, &mut fwd),
                ApStatus::NotFound
            );
        }
        assert_eq!(
            ap_find_antipath(g, 4, 1, buf.as_mut_ptr(), 16, &mut len, &mut fwd),
            ApStatus::Ok
        );
        assert_eq!((len, fwd), (5, 1));
        assert_eq!(
            ap_find_antipath(g, 4, 2, buf.as_mut_ptr(), 16, &mut len, &mut fwd),
            ApStatus::InvalidArgument
        );
        let mut cyc = 0usize;
        assert_eq!(ap_longest_anticycle_len(g, &mut cyc), ApStatus::Ok);
        assert!(cyc <= 6);
        ap_graph_free(g);
    }
}

#[test]
fn buffer_too_small_still_reports_length() {
    let g = new_graph(4, &[(0, 1), (2, 1), (2, 3)]);
    let mut buf = [0usize; 2];
    let mut len = 0usize;
    unsafe {
        assert_eq!(
            ap_longest_antipath(g, buf.as_mut_ptr(), buf.len(), &mut len, ptr::null_mut()),
            ApStatus::BufferTooSmall
        );
        assert_eq!(len, 4);
        ap_graph_free(g);
    }
}

#[test]
fn validate_and_improve() {
    // 0 -> 1 <- 2 -> 3 <- 4
    let g = new_graph(5, &[(0, 1), (2, 1), (2, 3), (4, 3)]);
    let mut buf = [0usize; 8];
    let mut len = 0usize;
    let mut fwd: c_int = -1;
    unsafe {
        assert_eq!(
            ap_validate_antipath(g, [0usize, 1, 2].as_ptr(), 3),
            ApStatus::Ok
        );
        assert_eq!(
            ap_validate_antipath(g, [0usize, 1, 3].as_ptr(), 3),
            ApStatus::InvalidPath
        );
        let start = [2usize, 1];
        assert_eq!(
            ap_improve(
                g,
                start.as_ptr(),
                2,
                buf.as_mut_ptr(),
                8,
                &mut len,
                &mut fwd
            ),
            ApStatus::Ok
        );
        assert!(len >= 2);
        assert_eq!(ap_validate_antipath(g, buf.as_ptr(), len), ApStatus::Ok);
        assert_eq!(
            ap_improve(
                g,
                [0usize, 3].as_ptr(),
                2,
                buf.as_mut_ptr(),
                8,
                &mut len,
                &mut fwd
            ),
            ApStatus::InvalidPath
        );
        ap_graph_free(g);
    }
}

#[test]
fn thresholds_and_generators() {
    let mut t = 0.0f64;
    let mut ti = 0usize;
    let mut g = ptr::null_mut();
    let mut pd = 0usize;
    unsafe {
        assert_eq!(ap_threshold(7, &mut t), ApStatus::Ok);
        assert_eq!(t, 4.0);
        assert_eq!(ap_integer_threshold(7, &mut ti), ApStatus::Ok);
        assert_eq!(ti, 5);
        assert_eq!(ap_integer_threshold(3, &mut ti), ApStatus::InvalidArgument);

        assert_eq!(ap_random_with_min_pd(12, 4, 99, 100, &mut g), ApStatus::Ok);
        assert_eq!(
            ap_graph_degree_stats(g, ptr::null_mut(), &mut pd),
            ApStatus::Ok
        );
        assert!(pd >= 4);
        let mut r = ptr::null_mut();
        assert_eq!(ap_graph_reverse(g, &mut r), ApStatus::Ok);
        assert_eq!(ap_graph_arc_count(r), ap_graph_arc_count(g));
        ap_graph_free(r);
        ap_graph_free(g);

        assert_eq!(
            ap_random_oriented_graph(5, 1.5, 0, &mut g),
            ApStatus::InvalidArgument
        );
        assert_eq!(ap_cycle_blowup(2, 1, &mut g), ApStatus::InvalidArgument);
    }
}

#[test]
fn status_messages_are_static_strings() {
    for s in [
        ApStatus::Ok,
        ApStatus::BufferTooSmall,
        ApStatus::InternalError,
    ] {
        let msg = unsafe { CStr::from_ptr(ap_status_message(s)) };
        assert!(!msg.to_str().unwrap().is_empty());
    }
}

fn target_dir() -> PathBuf {
    // tests run from target/<profile>/deps/
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn c_header_compiles_and_links() {
    let crate_dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let lib = target_dir().join("libantipath_ffi.a");
    if !lib.exists() {
        eprintln!("skipping: {} not built", lib.display());
        return;
    }
    let Ok(cc) = Command::new("cc").arg("--version").output() else {
        eprintln!("skipping: no C compiler");
        return;
    };
    assert!(cc.status.success());

    let out_dir = tempfile_dir();
    let exe = out_dir.join("smoke");
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(crate_dir.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C smoke test failed to compile");
    let run = Command::new(&exe).output().unwrap();
    assert!(
        run.status.success(),
        "smoke binary failed: {}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
    let _ = std::fs::remove_dir_all(out_dir);
}

fn tempfile_dir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("antipath-ffi-smoke-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

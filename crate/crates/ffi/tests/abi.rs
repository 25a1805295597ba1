use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use geocomplexity_ffi::*;

fn last_error() -> String {
    let p = gcx_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

#[test]
fn dataset_profile_round_trip() {
    let values = [0.0, 1.0, 10.0, 11.0];
    let labels = [7, 7, 9, 9];
    let mut ds = ptr::null_mut();
    unsafe {
        assert_eq!(gcx_dataset_new(values.as_ptr(), 4, 1, labels.as_ptr(), &mut ds), GcxStatus::Ok);
        assert_eq!(gcx_dataset_len(ds), 4);
        assert_eq!(gcx_dataset_dim(ds), 1);

        let mut profile = ptr::null_mut();
        assert_eq!(gcx_profile_compute(ds, 3, &mut profile), GcxStatus::Ok);
        let mut n1 = 0.0;
        assert_eq!(gcx_profile_get(profile, GcxMeasure::N1, &mut n1), GcxStatus::Ok);
        assert_eq!(n1, 0.5);
        let mut all = [0.0; 12];
        assert_eq!(gcx_profile_values(profile, all.as_mut_ptr()), GcxStatus::Ok);
        assert_eq!(all[GcxMeasure::T1 as usize], 0.5);
        assert_eq!(all[GcxMeasure::T2 as usize], 4.0);

        let mut single = 0.0;
        assert_eq!(gcx_measure(ds, GcxMeasure::N3, 3, &mut single), GcxStatus::Ok);
        assert_eq!(single, all[GcxMeasure::N3 as usize]);
        assert_eq!(gcx_measure(ds, GcxMeasure::L3, 3, &mut single), GcxStatus::Ok);
        assert_eq!(single, all[GcxMeasure::L3 as usize]);

        let mut json = ptr::null_mut();
        assert_eq!(gcx_profile_to_json(profile, &mut json), GcxStatus::Ok);
        let text = CStr::from_ptr(json).to_str().unwrap().to_owned();
        gcx_string_free(json);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["measures"]["N1"], 0.5);
        assert_eq!(value["classes"][0], "7");

        gcx_profile_free(profile);
        gcx_dataset_free(ds);
        gcx_dataset_free(ptr::null_mut());
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    let mut ds = ptr::null_mut();
    unsafe {
        let values = [0.0, 1.0];
        let labels = [1, 1];
        assert_eq!(gcx_dataset_new(values.as_ptr(), 2, 1, labels.as_ptr(), &mut ds), GcxStatus::InvalidData);
        assert!(last_error().contains("two classes"));
        assert!(ds.is_null());

        assert_eq!(gcx_dataset_new(ptr::null(), 2, 1, labels.as_ptr(), &mut ds), GcxStatus::NullPointer);
        let nan = [f64::NAN, 1.0];
        let two = [1, 2];
        assert_eq!(gcx_dataset_new(nan.as_ptr(), 2, 1, two.as_ptr(), &mut ds), GcxStatus::InvalidData);

        let path = CString::new("/definitely/not/here.csv").unwrap();
        let label = CString::new("label").unwrap();
        assert_eq!(gcx_dataset_from_csv(path.as_ptr(), label.as_ptr(), false, &mut ds), GcxStatus::Io);

        assert_eq!(gcx_generate_rings(10, 1.0, 1.5, 1.0, 1, &mut ds), GcxStatus::InvalidArgument);
        assert_eq!(gcx_generate_linear_margin(2, 10, 5.0, 1, &mut ds), GcxStatus::InvalidArgument);

        let mut v = 0.0;
        assert_eq!(gcx_profile_get(ptr::null(), GcxMeasure::F1, &mut v), GcxStatus::NullPointer);
        assert_eq!(gcx_dataset_len(ptr::null()), 0);
    }
    assert_eq!(unsafe { CStr::from_ptr(gcx_measure_name(GcxMeasure::N4)) }.to_str().unwrap(), "N4");
}

#[test]
fn generators_and_csv_input() {
    let dir = std::env::temp_dir().join(format!("gcx-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("p.csv");
    std::fs::write(&file, "x,y,label\n0,0,a\n0,1,a\n5,5,b\n5,6,b\n").unwrap();
    unsafe {
        let mut ds = ptr::null_mut();
        let path = CString::new(file.to_str().unwrap()).unwrap();
        let label = CString::new("label").unwrap();
        assert_eq!(gcx_dataset_from_csv(path.as_ptr(), label.as_ptr(), false, &mut ds), GcxStatus::Ok);
        let mut l1 = 1.0;
        assert_eq!(gcx_measure(ds, GcxMeasure::L1, 0, &mut l1), GcxStatus::Ok);
        assert!(l1 < 1e-12);
        gcx_dataset_free(ds);

        let makers: [&dyn Fn(*mut *mut GcxDataset) -> GcxStatus; 4] = [
            &|out| gcx_generate_random_labeling(3, 20, 1, out),
            &|out| gcx_generate_checkerboard(4, 20, 1, out),
            &|out| gcx_generate_rings(20, 1.0, 3.0, 0.5, 1, out),
            &|out| gcx_generate_linear_margin(2, 20, 0.1, 1, out),
        ];
        for make in makers {
            let mut ds = ptr::null_mut();
            assert_eq!(make(&mut ds), GcxStatus::Ok);
            assert_eq!(gcx_dataset_len(ds), 40);
            gcx_dataset_free(ds);
        }
    }
    std::fs::remove_dir_all(dir).unwrap();
}

const C_PROGRAM: &str = r#"
#include <math.h>
#include <stdio.h>
#include "geocomplexity.h"

int main(void) {
    double values[] = {0.0, 1.0, 10.0, 11.0};
    int32_t labels[] = {0, 0, 1, 1};
    GcxDataset *ds = NULL;
    GcxProfile *profile = NULL;
    double n1 = 0.0;
    if (gcx_dataset_new(values, 4, 1, labels, &ds) != GCX_STATUS_OK) return 1;
    if (gcx_profile_compute(ds, 1, &profile) != GCX_STATUS_OK) return 2;
    if (gcx_profile_get(profile, GCX_MEASURE_N1, &n1) != GCX_STATUS_OK) return 3;
    if (fabs(n1 - 0.5) > 1e-12) return 4;
    gcx_profile_free(profile);
    gcx_dataset_free(ds);
    if (gcx_dataset_new(values, 4, 1, NULL, &ds) != GCX_STATUS_NULL_POINTER) return 5;
    printf("%s\n", gcx_last_error_message());
    return 0;
}
"#;

/// Compiles a C program against the generated header and the static library.
#[test]
fn c_program_links_against_static_library() {
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let target = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = target.join("libgeocomplexity_ffi.a");
    assert!(lib.exists(), "missing {}", lib.display());
    let dir = std::env::temp_dir().join(format!("gcx-c-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("main.c");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let exe = dir.join("main");
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&exe).output().unwrap();
    assert!(run.status.success(), "exit {:?}", run.status.code());
    assert!(String::from_utf8_lossy(&run.stdout).contains("null"));
    std::fs::remove_dir_all(dir).unwrap();
}

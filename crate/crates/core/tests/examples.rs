//! Every example must run to completion.

macro_rules! example {
    ($name:ident, $file:literal) => {
        #[allow(dead_code)]
        #[path = $file]
        mod $name;
    };
}

example!(eigen, "../examples/eigen.rs");
example!(deficit, "../examples/deficit.rs");
example!(majorana, "../examples/majorana.rs");
example!(theta_sweep, "../examples/theta_sweep.rs");
example!(generalized, "../examples/generalized.rs");
example!(table, "../examples/table.rs");

#[test]
fn examples_run() {
    eigen::run_example().unwrap();
    deficit::run_example().unwrap();
    majorana::run_example().unwrap();
    theta_sweep::run_example().unwrap();
    generalized::run_example().unwrap();
    table::run_example().unwrap();
}

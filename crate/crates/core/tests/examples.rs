macro_rules! example {
    ($module:ident, $file:literal) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $module() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(worst_case_families, "worst_case_families.rs");
example!(greedy_heuristics, "greedy_heuristics.rs");
example!(two_phase_trace, "two_phase_trace.rs");
example!(exact_oracle, "exact_oracle.rs");
example!(lower_bounds, "lower_bounds.rs");
example!(random_corpus_ratios, "random_corpus_ratios.rs");
example!(instance_files, "instance_files.rs");

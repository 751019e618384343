//! Normalized upper Hessenberg matrices of binomial coefficients whose
//! determinants count lattice paths between two boundaries, with exact
//! determinant engines and independent oracles (closed forms and brute-force
//! path counts) for Catalan, k-Fuss-Catalan and rational-slope families.
//!
//! ```
//! use hessenberg_catalan::{build_path_matrix, det_all, rational_boundary};
//!
//! let bp = rational_boundary(7, 16, 1).unwrap();
//! let report = det_all(&build_path_matrix(&bp)).unwrap();
//! assert!(report.agree);
//! assert_eq!(report.value().to_string(), "10659");
//! ```

pub mod bench;
pub mod boundary;
pub mod closed_form;
pub mod det;
pub mod error;
pub mod hessenberg;
pub mod num;
pub mod paths;
pub mod sequence;

pub use boundary::{custom_boundary, fuss_boundary, rational_boundary, BoundaryPair, Family};
pub use closed_form::{
    bizley_count, bizley_phi, catalan, enumerate_partitions, fuss_catalan, PartitionMultiset,
};
pub use det::{
    det_all, det_elimination, det_fraction_free, det_recurrence, det_with, DetAll, DetReport,
    Engine,
};
pub use error::{Error, Result};
pub use hessenberg::{
    build_path_matrix, is_normalized_hessenberg, BinomialHessenberg, SquareMatrix,
};
pub use num::{binomial, factorial, Integer, Rational};
pub use paths::{count_below_line, count_boundary_paths, PathCount, PathModel};
pub use sequence::{
    compare, compare_route, generate, parse_bfile, render_bfile, BFile, Comparison, Mismatch,
    Route, SequenceSpec,
};

//! Seed-reproducible generators for synthetic high-dimensional data:
//! geometric shapes, spherical holes, structured noise columns and
//! multi-cluster scenes.
//!
//! ```
//! use hdshapes::{generate, make_stream, ShapeKind, ShapeParams};
//!
//! let mut stream = make_stream(7);
//! let roll = generate(ShapeKind::SwissRoll, &ShapeParams::with_n(100), &mut stream).unwrap();
//! assert_eq!((roll.nrows(), roll.ncols()), (100, 3));
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]
pub mod composer;
pub mod dataset;
pub mod error;
pub mod noise;
pub mod ops;
pub mod partition;
pub mod rng;
pub mod rotation;
pub mod shapes;
pub mod topology;

pub use composer::{
    apply_transform, gen_multicluster, make_preset, pad_to_dim, simplex_vertices, MultiClusterSpec,
    PresetOptions, Rotation, PRESETS,
};
pub use dataset::Dataset;
pub use error::{Error, Result};
pub use noise::{gen_noisedims, gen_wavydims1, gen_wavydims2, gen_wavydims3};
pub use ops::{gen_bkgnoise, normalize_data, randomize_rows, relocate_clusters};
pub use partition::{gen_nproduct, gen_nsum};
pub use rng::{make_stream, RandomStream};
pub use rotation::{gen_rotation, PlaneRotation, RotationPlan};
pub use shapes::{generate, ParamName, ShapeKind, ShapeParams};
pub use topology::{gen_hole, gen_scurvehole, gen_unifcubehole, HoleSpec};

//! Finite posets, frames, frame homomorphisms, Birkhoff duality, frame
//! products and coproducts, and graded frames.

mod birkhoff;
mod frame;
mod graded;
mod poset;

pub use birkhoff::{downset_frame, frame_coproduct, join_irreducibles, FrameCoproduct};
pub use frame::{
    check_frame, enumerate_frame_homs, frame_iso, frame_product, FiniteFrame, FrameHom,
    FrameProduct,
};
pub use graded::{
    check_graded_frame, check_graded_frame_hom, graded_to_frame, GradedCarrier, GradedFrame,
    GradedFrameMap,
};
pub use poset::FinitePoset;

//! Mapping spaces and composition of the rigidification `𝔠(S)`.

mod category;
mod cube;
mod induced;
mod nerve;
mod space;
mod triple;

pub use category::{categorify, CompositionKey, LawViolation, SimplicialCategoryPresentation};
pub use cube::{cube_face, necklace_mapping_space, CubePoset};
pub use induced::{induced_map, OrderedMap};
pub use nerve::{coherent_nerve_truncated, CoherentNerveLevel, NerveFunctor, MAX_NERVE_LEVEL};
pub use space::{enumerate_nondegenerate_maps, mapping_space, mapping_space_bounded, MappingSpace};
pub use triple::{compose, FlaggedTriple, MappingSimplex};

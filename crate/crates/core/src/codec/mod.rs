//! Lossless storage of plateaued and bent functions.

mod ball;
mod bits;
mod enumerative;
mod faces;
mod pipeline;
mod report;
mod spectrum;
mod stream;

pub use ball::{reconstruct_from_ball, BallValues};
pub use bits::{BitBuf, BitReader};
pub use enumerative::{binomial, rank_subset, rank_width, unrank_subset};
pub use faces::{decode_faces, encode_faces, face_part_bits, face_sum, FaceCounts, FaceValues};
pub use pipeline::{
    bent_radius, decode, decode_bent_dual, decode_bytes, decode_plateaued, decode_with_trace,
    encode_bent_dual, encode_plateaued, plateaued_radius, DecodeTrace,
};
pub use report::{bitstream_length_report, LengthReport};
pub use spectrum::{
    decode_spectrum_restriction, encode_spectrum_restriction, restrict_spectrum,
    spectrum_part_bits,
};
pub use stream::{CodecBitstream, Mode, TransformRecord, HEADER_BITS, MAGIC, SECTION_PREFIX_BITS};

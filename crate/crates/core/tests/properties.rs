use bentcodec::affine::{apply_affine, invert_transform, random_invertible_matrix, AffineTransform};
use bentcodec::boolfn::{
    algebraic_degree, classify_plateau, inverse_walsh, mobius_transform, walsh_transform,
    BooleanFunction,
};
use bentcodec::codec::{
    decode_bytes, decode_faces, encode_faces, encode_plateaued, face_sum, rank_subset,
    unrank_subset, BitBuf,
};
use bentcodec::search::random_maiorana_mcfarland;
use bentcodec::stats::{face_histogram, Face, FaceRegion};
use proptest::prelude::*;

fn function(max_n: usize) -> impl Strategy<Value = BooleanFunction> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), 1 << n)
            .prop_map(move |bits| BooleanFunction::from_bits(n, &bits).unwrap())
    })
}

fn transform(n: usize) -> impl Strategy<Value = AffineTransform> {
    let mask = (1u32 << n) - 1;
    (any::<u64>(), any::<u32>(), any::<u32>(), any::<bool>()).prop_map(move |(seed, b, c, d)| {
        AffineTransform {
            a: random_invertible_matrix(n, seed),
            b: b & mask,
            c: c & mask,
            d,
        }
    })
}

fn function_and_transform(max_n: usize) -> impl Strategy<Value = (BooleanFunction, AffineTransform)> {
    function(max_n).prop_flat_map(|f| {
        let n = f.n();
        (Just(f), transform(n))
    })
}

fn sorted_magnitudes(f: &BooleanFunction) -> Vec<i32> {
    let mut m: Vec<i32> = walsh_transform(f).values().iter().map(|v| v.abs()).collect();
    m.sort_unstable();
    m
}

proptest! {
    #[test]
    fn parseval_and_inverse(f in function(10)) {
        let w = walsh_transform(&f);
        prop_assert!(w.satisfies_parseval());
        prop_assert_eq!(inverse_walsh(&w).unwrap(), f);
    }

    #[test]
    fn mobius_is_involution(f in function(10)) {
        prop_assert_eq!(mobius_transform(&mobius_transform(&f)), f);
    }

    #[test]
    fn tt_text_roundtrip(f in function(8)) {
        prop_assert_eq!(BooleanFunction::from_tt_str(&f.to_tt_string()).unwrap(), f);
    }

    #[test]
    fn affine_invariants((f, t) in function_and_transform(8)) {
        let g = apply_affine(&f, &t).unwrap();
        prop_assert_eq!(sorted_magnitudes(&g), sorted_magnitudes(&f));
        prop_assert_eq!(classify_plateau(&g), classify_plateau(&f));
        if algebraic_degree(&f) > 1 {
            prop_assert_eq!(algebraic_degree(&g), algebraic_degree(&f));
        }
        let inv = invert_transform(&t).unwrap();
        prop_assert_eq!(apply_affine(&g, &inv).unwrap(), f.clone());
        prop_assert_eq!(apply_affine(&apply_affine(&f, &inv).unwrap(), &t).unwrap(), f);
    }

    #[test]
    fn adding_affine_keeps_face_parity((f, t) in function_and_transform(7)) {
        prop_assume!(f.n() >= 2);
        let ell = AffineTransform { a: bentcodec::BinaryMatrix::identity(f.n()), b: 0, ..t };
        let g = apply_affine(&f, &ell).unwrap();
        for face in Face::all(f.n()) {
            for p in FaceRegion::All.translates(&face) {
                prop_assert_eq!(face.zero_count(&f, p) % 2, face.zero_count(&g, p) % 2);
            }
            let hf = face_histogram(&f, face, FaceRegion::All).unwrap();
            let hg = face_histogram(&g, face, FaceRegion::All).unwrap();
            prop_assert_eq!(hf.odd(), hg.odd());
        }
    }

    #[test]
    fn subset_rank_roundtrip(universe in 1usize..300, picks in prop::collection::vec(any::<bool>(), 300)) {
        let subset: Vec<usize> = (0..universe).filter(|&i| picks[i]).collect();
        let r = rank_subset(universe, &subset).unwrap();
        prop_assert_eq!(unrank_subset(universe, subset.len(), &r).unwrap(), subset);
    }

    #[test]
    fn bit_fields_roundtrip(fields in prop::collection::vec((any::<u64>(), 0usize..=64), 0..40)) {
        let mut b = BitBuf::new();
        for &(v, w) in &fields {
            let v = if w == 64 { v } else { v & ((1u64 << w) - 1) };
            b.write(v, w);
        }
        let mut r = b.reader();
        for &(v, w) in &fields {
            let v = if w == 64 { v } else { v & ((1u64 << w) - 1) };
            prop_assert_eq!(r.read(w).unwrap(), v);
        }
        prop_assert!(r.finish().is_ok());
        prop_assert!(BitBuf::from_bytes(b.bytes().to_vec(), b.len()).is_ok());
    }

    #[test]
    fn face_part_roundtrip(faces in prop::collection::vec(prop::array::uniform4(any::<bool>()), 0..60)) {
        let sums: Vec<i64> = faces.iter().map(face_sum).collect();
        let (bits, counts) = encode_faces(&faces, &sums).unwrap();
        let mut r = bits.reader();
        let (back, c2) = decode_faces(&mut r, &sums).unwrap();
        prop_assert!(r.finish().is_ok());
        prop_assert_eq!(back, faces);
        prop_assert_eq!(c2, counts);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn moved_bent_functions_roundtrip(m in 1usize..=3, seed in any::<u64>(), t_seed in any::<u64>()) {
        let f = random_maiorana_mcfarland(m, seed).unwrap();
        let n = 2 * m;
        let t = AffineTransform {
            a: random_invertible_matrix(n, t_seed),
            b: (t_seed as u32) & ((1 << n) - 1),
            c: ((t_seed >> 32) as u32) & ((1 << n) - 1),
            d: t_seed & 1 == 1,
        };
        let g = apply_affine(&f, &t).unwrap();
        let stream = encode_plateaued(&g, seed).unwrap();
        prop_assert_eq!(decode_bytes(&stream.to_bytes()).unwrap(), g);
    }
}

use bentcodec::boolfn::{classify_plateau, walsh_transform, BooleanFunction, PlateauClass};
use bentcodec::codec::{
    bitstream_length_report, decode, decode_bent_dual, decode_bytes, decode_plateaued,
    decode_spectrum_restriction, encode_bent_dual, encode_plateaued, encode_spectrum_restriction,
    restrict_spectrum, CodecBitstream, Mode,
};
use bentcodec::search::{constructed_bent_corpus, enumerate_plateaued, hyperplane_restrictions};
use bentcodec::stats::Face;
use bentcodec::Error;

fn from_anf(n: usize, monomials: &[&[usize]]) -> BooleanFunction {
    BooleanFunction::from_fn(n, |x| {
        monomials
            .iter()
            .filter(|m| m.iter().all(|&i| x >> (n - i) & 1 == 1))
            .count()
            % 2
            == 1
    })
    .unwrap()
}

#[test]
fn self_dual_product_both_paths() {
    let f = from_anf(2, &[&[1, 2]]);
    assert_eq!(bentcodec::dual_bent(&f).unwrap(), f);
    let direct = encode_plateaued(&f, 1).unwrap();
    assert_eq!(direct.mode, Mode::PlateauedDirect);
    assert_eq!(decode_plateaued(&direct).unwrap(), f);
    let dual = encode_bent_dual(&f, 1).unwrap();
    assert_eq!(dual.mode, Mode::BentDual);
    assert_eq!(decode_bent_dual(&dual).unwrap(), f);
    assert!(decode_bent_dual(&direct).is_err());
}

#[test]
fn quadratic_bent_beats_raw_storage() {
    let f = from_anf(4, &[&[1, 2], &[3, 4]]);
    let b = encode_plateaued(&f, 1).unwrap();
    let rep = bitstream_length_report(&b).unwrap();
    assert!(rep.payload_bits <= 16, "{rep:?}");
    assert!(rep.accounting_holds());
}

#[test]
fn every_plateaued_function_up_to_four_variables() {
    for n in 1..=4 {
        for s in (n % 2..=n).step_by(2) {
            for f in &enumerate_plateaued(n, s).unwrap().functions {
                let b = encode_plateaued(f, 2).unwrap();
                assert_eq!(b.s, s);
                assert_eq!(&decode_bytes(&b.to_bytes()).unwrap(), f, "n={n} s={s} {f:?}");
            }
        }
    }
}

#[test]
fn restricted_maiorana_mcfarland_five_variables() {
    let bent = constructed_bent_corpus(3, 12, 99).unwrap();
    for h in &hyperplane_restrictions(&bent).unwrap().functions {
        assert_eq!(classify_plateau(h), PlateauClass::Plateaued(1));
        let b = encode_plateaued(h, 4).unwrap();
        assert_eq!(&decode(&b).unwrap(), h);
    }
}

#[test]
fn spectrum_part_inverts_on_plateaued_instances() {
    let mut count = 0;
    for m in 1..=3 {
        let bent = constructed_bent_corpus(m, 40, m as u64).unwrap();
        let near = if m >= 2 { hyperplane_restrictions(&bent).unwrap().functions } else { vec![] };
        for f in bent.functions.iter().chain(&near) {
            let n = f.n();
            if n < 2 {
                continue;
            }
            let s = classify_plateau(f).order().unwrap() as usize;
            let w = walsh_transform(f);
            for face in Face::all(n) {
                let (bits, k) = encode_spectrum_restriction(&w, &face, s).unwrap();
                let mut r = bits.reader();
                let back = decode_spectrum_restriction(&mut r, &face, s).unwrap();
                r.finish().unwrap();
                assert_eq!(back, restrict_spectrum(&w, &face));
                assert_eq!(back.iter().filter(|&&v| v != 0).count(), k);
                count += 1;
            }
        }
    }
    assert!(count >= 1000, "{count}");
}

#[test]
fn corrupted_streams_are_rejected() {
    let f = from_anf(4, &[&[1, 2], &[3, 4], &[1]]);
    for stream in [encode_plateaued(&f, 1).unwrap(), encode_bent_dual(&f, 1).unwrap()] {
        let bytes = stream.to_bytes();
        for cut in 0..bytes.len() {
            assert!(matches!(decode_bytes(&bytes[..cut]), Err(Error::MalformedStream(_))));
        }
        // a flipped bit either fails to decode or still gives a function of the same class
        for i in 7 * 8..bytes.len() * 8 {
            let mut damaged = bytes.clone();
            damaged[i / 8] ^= 0x80 >> (i % 8);
            if let Ok(g) = decode_bytes(&damaged) {
                assert_eq!(classify_plateau(&g), classify_plateau(&f));
            }
        }
    }
    assert!(matches!(decode_bytes(b"garbage"), Err(Error::MalformedStream(_))));
    assert!(matches!(CodecBitstream::from_bytes(b""), Err(Error::MalformedStream(_))));
}

#[test]
fn non_plateaued_and_non_bent_rejected() {
    let cubic = from_anf(3, &[&[1, 2, 3]]);
    assert_eq!(encode_plateaued(&cubic, 1).unwrap_err(), Error::NotPlateaued);
    let near = from_anf(3, &[&[1, 2], &[3]]);
    assert_eq!(encode_bent_dual(&near, 1).unwrap_err(), Error::NotBent);
}

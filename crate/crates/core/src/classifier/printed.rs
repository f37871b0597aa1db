//! Transcribed algebraic curves, kept verbatim so that the verification
//! suite can compare them against independently derived polynomials.

use crate::ratpoly::MultiPoly;

pub const CS: [&str; 2] = ["c", "s"];
pub const MCS: [&str; 3] = ["m", "c", "s"];
pub const UCS: [&str; 3] = ["u", "c", "s"];

pub const M: &str = "243 c^2 + (-900 s - 778 + 540 s^2 - 1080 s^3) c
    + 823 + 1284 s + 480 s^2 + 480 s^3 + 2700 s^4 - 1296 s^5 + 1296 s^6";

pub const N: &str = "3 c^3 + (-42 s + 37) c^2 + (-476 s + 588 s^2 + 3397) c
    + 6076 s^2 - 8232 s^3 - 8666 s - 2125";

pub const P_STAR: &str = "-2 - 20 s + 6 s^2 - 12 s^3";

pub const R: &str = "31104 s^9 - 10368 s^8 + 32832 s^7 + (-15552 c + 39456) s^6
    + (-3816 - 864 c) s^5 + (23472 - 3312 c) s^4 + 24 (c - 1)(108 c - 593) s^3
    + 24 (33 c + 107)(c - 1) s^2 - 690 (c - 1)^2 s + 36 (c - 1)^3";

pub const Q: &str = "6 m^2 s - 4 s m + 12 m s^2 - 2 s^2 + 6 s^3 - 1 + c";

pub const P: &str = "6 m^3 - 5 m^2 + 12 m^2 s + 10 m + 18 m s^2 - 10 s m + 5 - 5 c
    - 15 s^2 + 24 s^3 + 20 s";

/// The same cubic as listed next to its discriminant (opposite sign).
pub const P_ALT: &str = "-6 m^3 + (5 - 12 s) m^2 + (-18 s^2 + 10 s - 10) m
    - 24 s^3 + 15 s^2 - 20 s - 5 + 5 c";

pub const DIS_P: &str = "-24300 c^2 + (120600 s - 75600 s^2 + 73100 + 151200 s^3) c
    - 70300 - 96200 s^2 - 163600 s - 504000 s^4 + 259200 s^5 + 2400 s^3 - 259200 s^6";

pub const I: &str = "-168 u^4 + (90 - 15 c - 168 s) u^3
    + (10 c - 130 - 168 s^2 + 90 s - 15 s c) u^2
    + (-50 + 10 s c + 20 c - 130 s + 90 s^2 - 168 s^3 - 15 s^2 c) u
    - 5 - 50 s + 90 s^3 + 5 c^2 + 20 s c - 130 s^2 - 168 s^4 + 10 s^2 c - 15 s^3 c";

pub const D1: &str = "-32928 s^3 + (1764 c + 22344) s^2 - (84 c^2 + 1148 c + 28504) s
    + 3 c^3 + 44 c^2 + 7919 c - 5842";

pub const D2: &str = "30375 c^5
    + (67500 s^2 - 135000 s^3 + 93100 + 567900 s) c^4
    + (2083200 s^2 - 3518100 s^4 + 408900 s + 162000 s^6 + 1280400 s^3 - 162000 s^5 + 880703) c^3
    + (-368064 s - 4730400 s^6 - 8347536 s^2 + 5443200 s^7 + 6777000 s^4 - 11014128 s^3
       - 25691040 s^5 - 3605574) c^2
    + (-44997120 s^7 + 4400084 - 15110352 s + 23678784 s^5 - 9163584 s^6 + 60963840 s^8
       - 22971024 s^2 - 17525952 s^3 - 58261680 s^4) c
    + 227598336 s^9 - 138184704 s^8 + 31667136 s + 301625856 s^7 + 71568192 s^3
    + 152350848 s^6 + 1062232 + 54393984 s^5 + 49720800 s^2 + 187454304 s^4";

pub const DIS_D2_DEG12: &str = "11664000 s^12 - 23328000 s^11 + 367804800 s^10
    - 487728000 s^9 + 3390049800 s^8 - 2253805200 s^7 + 4960871884 s^6 + 2160459976 s^5
    + 1280057526 s^4 + 4059678628 s^3 + 1729573411 s^2 + 1328288220 s + 695918709";

pub const DIS_D2_QUARTIC: &str = "84672 s^4 + 22512 s^3 + 76402 s^2 + 58822 s + 16767";

pub const D_TILDE: &str = "16767 + 29606 s - 12083 s^2 - 4040 s^3 + 20160 s^4";

pub const D_TILDE_2: &str = "30375 c^5 - 8897979325/32768 c^4
    - 602652229378808443/274877906944 c^3 + 3196448247290763459/137438953472 c^2
    + 2641868472255829530863/70368744177664 c - 17460388511693021202337/35184372088832";

/// Parse a transcription; the constants above are known to be well formed.
pub fn parse(text: &str, vars: &[&str]) -> MultiPoly {
    MultiPoly::parse(text, vars).expect("transcribed polynomial parses")
}

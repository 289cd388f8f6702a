//! Polynomial data as displayed in the source, transcribed to plain ASCII
//! (`\cdot` becomes `*`, braces around exponents dropped, line breaks
//! joined). Nothing here is expanded or simplified.

pub const PSL3_2_F: &str = "X^7 - ((c - 2)a + 2b + c)X^6 + (-(b - 4)(c - 1)a^2 + ((c - 2)b^2 +(2c^2 - 5c + 4)b - 2c^2)a + b(2bc + 2c^2 + b^2 ))X^4 +((2c^2 - 1)(b - 4)a^2 + ((-2c^2 + c + 2)b^2 + (5c^2 + 2c - 4)b - 4c^2)a -(c + 1)b^3 - c(2c + 3)b^2 + c^2b)X^3 + ((c^2 + 3c - 1)(4 - b) a^2 +((3c - 2)b^2 - 2(c^2 + 4c - 2)b + 4c^2 )a + b(b^2 + 3bc - c^2 ))cX^2 +(2abc - 8ac + ab - 4a - b^2 + 2bc)ac^2X - a^2(b - 4)c^3 +tX^2(X - c)(X^2 - bX + b)";

/// Published for a = b = c = 1 only.
pub const PSL3_2_G: &str = "X^8 + (-14t + 14)X^7 + (87t^2 - 178t + 109)X^6 + (-314t^3 + 980t^2 - 1210t + 431)X^5 + (721t^4 - 3032t^3 + 5654t^2 - 4119t + 1293)X^4 + (-1080t^5 + 5700t^4 - 14238t^3 + 15835t^2 - 9776t + 2542)X^3 + (1032t^6 - 6521t^5 + 20397t^4 - 30663t^3 + 28012t^2 - 14338t + 3343)X^2 + (-576t^7 + 4212t^6 - 15786t^5 + 29976t^4 - 36081t^3 + 27147t^2 - 11847t + 1738)X + 144t^8 - 1188t^7 + 5169t^6 - 11874t^5 + 17689t^4 - 17396t^3 + 10799t^2 - 2948t + 295";

pub const PGAMMAL2_8_F: &str = "(x^3 + 16x^2 + 160x + 384)^3- 7^3* t(x^2+13x+128)";

pub const PGAMMAL2_8_G: &str =
    "(x^9 + 11x^8 + 4x^7 - 868x^6 + 6174x^5 - 43974x^4 + 37492x^3 - 28852x^2 - 2967x + 211)^3(x-5)+2^7* 7^3* t(x^3 - x^2 - 9x + 1)^7";

pub const M11_F: &str = "(x^2-4x-16)^5(x^2-4x-1)+2tx^3(x-4)^3(x^3-128)";

/// Rational in x and s.
pub const M11_G: &str = "x^11+x^7(3x+2)s+x(3x^4 + 14/5x^3 + 4/5x^2 - 40/81x - 16/81)s^2-(x-2/5)(x+2/5)s^3";

/// s in terms of t.
pub const M11_S: &str = "4t/10125";

/// SHA-256 of the strings above joined by newlines, in declaration order.
pub const GOLDEN_SHA256: &str = "2c7ea7a3091b7c5f6b36d107e15fa1eef9f462e8f5ed3eacba62639f1494b0d8";

pub fn all() -> [&'static str; 7] {
    [PSL3_2_F, PSL3_2_G, PGAMMAL2_8_F, PGAMMAL2_8_G, M11_F, M11_G, M11_S]
}

fn main() {
    for x in [0.0, 0.5, 1.0, -1.0, 2.0, -2.0, 3.0, 3.5, 4.0, -4.0, 5.0, 8.2, -8.2, 12.0, -12.0] {
        let (ai, aip) = sqw::specfun::airy_ai_pair(x);
        println!("x={x:7.3}  Ai={ai:+.15e}  Ai'={aip:+.15e}");
    }
}

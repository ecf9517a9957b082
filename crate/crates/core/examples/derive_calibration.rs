//! Prints the calibration table derived in exact arithmetic.

fn main() {
    match apolar::calibration::derive::render_table() {
        Ok(src) => print!("{src}"),
        Err(e) => {
            eprintln!("calibration failed: {e}");
            std::process::exit(1);
        }
    }
}

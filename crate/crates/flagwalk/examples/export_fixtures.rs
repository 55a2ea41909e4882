//! Writes the fixture mapfiles into a directory (default `fixtures/`) and
//! prints their checksums.

use flagwalk::{fixtures, mapfile};

fn main() -> std::io::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "fixtures".to_string());
    std::fs::create_dir_all(&dir)?;
    for name in fixtures::names() {
        let m = fixtures::construct(name).expect("every fixture has a constructor");
        let text = mapfile::to_string(&m);
        std::fs::write(format!("{dir}/{name}.map"), &text)?;
        println!("{name} {}", fixtures::checksum(&text));
    }
    Ok(())
}

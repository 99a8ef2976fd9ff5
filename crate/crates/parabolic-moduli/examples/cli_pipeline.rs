//! Drive the JSON front end in-process, as the `parmod` binary does.
//!
//! ```text
//! cargo run --example cli_pipeline
//! ```

use parabolic_moduli::cli;

fn main() {
    let dir = std::env::temp_dir();
    let doc = r#"{
        "r": 3, "d": -1, "genus": 4,
        "points": [{ "label": "x", "weights": ["1/20", "3/20", "19/20"] }],
        "transform": { "perm": [0], "sign": -1, "tdeg": 1, "hecke": [1] }
    }"#;
    let path = dir.join("parmod-example.json");
    std::fs::write(&path, doc).expect("write input");
    let p = path.to_str().unwrap();

    for cmd in ["normalize", "invariant", "generic", "transform", "aut"] {
        let (code, out) = cli::run(["parmod", cmd, p].map(String::from).to_vec());
        println!("$ parmod {cmd} {p}   # exit {code}\n{out}");
    }
    let (code, out) = cli::run(
        ["parmod", "dims", "--g", "2", "--n", "1", "--r", "3"]
            .map(String::from)
            .to_vec(),
    );
    println!("$ parmod dims --g 2 --n 1 --r 3   # exit {code}\n{out}");
    std::fs::remove_file(&path).ok();
}

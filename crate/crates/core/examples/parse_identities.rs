//! Parses identities and shows their canonical form, dual and class key.
//!
//! cargo run --example parse_identities -- "x * (z * y) = (x * y) * z"

use groupoid_lab::identity::{canonicalize, class_key, dual, laws, parse_identity};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let texts: Vec<String> = if args.is_empty() {
        laws::ALL.iter().map(|(_, t)| t.to_string()).collect()
    } else {
        args
    };
    for text in texts {
        match parse_identity(&text) {
            Ok(id) => {
                println!("{id}");
                println!("  canonical {}", canonicalize(&id));
                println!("  dual      {}", dual(&id));
                println!("  class     {}", class_key(&id).0);
            }
            Err(e) => println!("{text}\n  error: {e}"),
        }
    }
}

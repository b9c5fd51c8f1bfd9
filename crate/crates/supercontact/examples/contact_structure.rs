//! The standard contact structure on R^{2l+1|n}: the contact form, the
//! omega matrices, the Reeb field, the tangent frame and its relations.
//!
//! Run with: cargo run --example contact_structure

use supercontact::{ContactContext, CoordId, Dims, Superfunction};

fn main() {
    let ctx = ContactContext::new(Dims::new(1, 2));
    let dims = ctx.dims();
    let m = dims.gen_count();

    println!("contact form: alpha = {}", ctx.alpha());
    println!("Reeb field:   T_0 = {}", ctx.reeb());
    println!("alpha(T_0) = {}", ctx.alpha().eval(ctx.reeb()));
    println!();

    println!("tangent frame of ker alpha:");
    for r in 1..=m {
        println!("  T_{r} = {}", ctx.frame_element(r));
    }
    println!();

    println!("omega_(rs) =");
    for r in 1..=m {
        let row: Vec<String> = (1..=m).map(|s| ctx.omega_lower(r, s).to_string()).collect();
        println!("  [{}]", row.join(", "));
    }
    println!();

    // the frame relations
    println!("T_r(q^k) = delta_r^k:");
    for r in 1..=m {
        let row: Vec<String> = (1..=m)
            .map(|k| ctx.frame_element(r).apply(&ctx.gen_coord(k)).to_string())
            .collect();
        println!("  T_{r}: [{}]", row.join(", "));
    }
    println!();

    let z = Superfunction::var(CoordId::Z, dims);
    println!("T_r(z) = -omega_(kr) q^k:");
    for r in 1..=m {
        println!("  T_{r}(z) = {}", ctx.frame_element(r).apply(&z));
    }
    println!();

    println!("[T_r, T_s] = -2 omega_(rs) d/dz:");
    for r in 1..=m {
        for s in 1..=m {
            let bracket = ctx.frame_element(r).bracket(ctx.frame_element(s));
            if !bracket.is_zero() {
                println!("  [T_{r}, T_{s}] = {bracket}");
            }
        }
    }
    println!();

    // membership in the contact distribution vs preserving it
    println!("T_1 tangent: {}", ctx.is_tangent(ctx.frame_element(1)));
    println!("T_1 contact: {}", ctx.is_contact(ctx.frame_element(1)));
    println!("T_0 tangent: {}", ctx.is_tangent(ctx.reeb()));
    println!("T_0 contact: {}", ctx.is_contact(ctx.reeb()));
}

//! Rendering for the table, alpha, and q-expansion commands.

use clap::ValueEnum;
use pullback_core::special::{
    alpha_direct, alpha_from_pieces, AlphaResult, Table1Row, Table2Row,
};
use pullback_core::factor::FactoredPiMonomial;
use pullback_core::{QSeries, Result};
use serde_json::json;

use crate::RouteArg;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

pub fn print_table1(rows: &[Table1Row], format: Format) {
    match format {
        Format::Text => {
            let w3 = rows.iter().map(|r| r.h3.to_string().len()).max().unwrap_or(8);
            println!("{:<4} {:<w3$} H(k-1,4)", "k", "H(k-1,3)", w3 = w3.max(8));
            for r in rows {
                println!("{:<4} {:<w3$} {}", r.k, r.h3.to_string(), r.h4, w3 = w3.max(8));
            }
        }
        Format::Csv => {
            for r in rows {
                println!("{},{},{}", r.k, r.h3, r.h4);
            }
        }
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(rows).unwrap());
        }
    }
}

pub fn print_table2(rows: &[Table2Row], format: Format) {
    match format {
        Format::Text => {
            println!("{:<4} alpha_k", "k");
            for r in rows {
                println!("{:<4} {}", r.k, r.factored);
            }
        }
        Format::Csv => {
            for r in rows {
                println!("{},{}", r.k, r.factored);
            }
        }
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(rows).unwrap());
        }
    }
}

fn factored(a: &AlphaResult) -> FactoredPiMonomial {
    FactoredPiMonomial::from_monomial(&a.value)
}

pub fn print_alpha(ks: &[u32], route: RouteArg, format: Format) -> Result<()> {
    let mut json_rows = Vec::new();
    for &k in ks {
        match route {
            RouteArg::Direct | RouteArg::Pieces => {
                let a = if route == RouteArg::Direct {
                    alpha_direct(k)?
                } else {
                    alpha_from_pieces(k)?
                };
                match format {
                    Format::Text => println!("{:<4} {}", k, factored(&a)),
                    Format::Csv => println!("{},{}", k, factored(&a)),
                    Format::Json => json_rows.push(json!({
                        "k": k,
                        "route": a.route,
                        "alpha": a.value,
                        "factored": factored(&a).to_string(),
                    })),
                }
            }
            RouteArg::Both => {
                let d = alpha_direct(k)?;
                let p = alpha_from_pieces(k)?;
                let verdict = if d.value == p.value { "EQUAL" } else { "UNEQUAL" };
                match format {
                    Format::Text => {
                        println!("{:<4} direct  {}", k, factored(&d));
                        println!("{:<4} pieces  {}", k, factored(&p));
                        println!("{:<4} {}", k, verdict);
                    }
                    Format::Csv => {
                        println!("{},direct,{}", k, factored(&d));
                        println!("{},pieces,{}", k, factored(&p));
                        println!("{},{}", k, verdict);
                    }
                    Format::Json => json_rows.push(json!({
                        "k": k,
                        "direct": d.value,
                        "pieces": p.value,
                        "factored": factored(&d).to_string(),
                        "equal": d.value == p.value,
                    })),
                }
            }
        }
    }
    if format == Format::Json {
        println!("{}", serde_json::to_string_pretty(&json_rows).unwrap());
    }
    Ok(())
}

pub fn print_qexp(series: &QSeries, format: Format) {
    match format {
        Format::Text => {
            let parts: Vec<String> = series.coeffs().iter().map(|c| c.to_string()).collect();
            println!("{}", parts.join(", "));
        }
        Format::Csv => {
            for (n, c) in series.coeffs().iter().enumerate() {
                println!("{n},{c}");
            }
        }
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(series).unwrap());
        }
    }
}

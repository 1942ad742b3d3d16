//! `oracle` subcommands: print brute-force values next to the formula
//! values and exit 1 on any disagreement.

use std::fmt::Write as _;

use num_bigint::BigInt;
use toric_fano::lattice::oracle::{gamma_geometric, lattice_width_brute, mu_by_height_count, Side};
use toric_fano::lattice::{edge_invariants, lattice_width, primitive_edges, LatticePolygon, PrimitiveEdge};

use crate::{read_document, CliError, OracleCommand, Outcome, EXIT_FAILURE, EXIT_OK};

fn selected(poly: &LatticePolygon, edge: Option<usize>) -> Result<Vec<PrimitiveEdge>, CliError> {
    let edges = primitive_edges(poly);
    match edge {
        None => Ok(edges),
        Some(i) => edges
            .into_iter()
            .find(|e| e.index == i)
            .map(|e| vec![e])
            .ok_or_else(|| CliError::Parse(format!("edge {i} is not a primitive edge of {poly}"))),
    }
}

pub fn cmd_oracle(which: &OracleCommand) -> Result<Outcome, CliError> {
    let mut out = String::new();
    let mut agree = true;
    let internal = |e: toric_fano::lattice::LatticeError| CliError::Internal(e.to_string());
    match which {
        OracleCommand::Gamma { file, edge } => {
            let poly = read_document(file)?.polygon()?;
            for e in selected(&poly, *edge)? {
                let inv = edge_invariants(&poly, &e).map_err(internal)?;
                let gb = gamma_geometric(&poly, &e, Side::Left);
                let gc = gamma_geometric(&poly, &e, Side::Right);
                agree &= gb == inv.gamma_b && gc == inv.gamma_c;
                let _ = writeln!(
                    out,
                    "edge {}: gamma_b = {gb} (formula {}), gamma_c = {gc} (formula {})",
                    e.index, inv.gamma_b, inv.gamma_c
                );
            }
        }
        OracleCommand::Mu { file, edge } => {
            let poly = read_document(file)?.polygon()?;
            for e in selected(&poly, *edge)? {
                let inv = edge_invariants(&poly, &e).map_err(internal)?;
                let mu = mu_by_height_count(&poly, &e);
                agree &= mu == inv.mu;
                let _ = writeln!(out, "edge {}: mu = {mu} (formula {})", e.index, inv.mu);
            }
        }
        OracleCommand::Width { file } => {
            let poly = read_document(file)?.polygon()?;
            let brute = lattice_width_brute(&poly);
            let (edge_width, dir) = lattice_width(&poly);
            // edge normals give an upper bound that is exact at width one
            agree &= brute <= edge_width && ((brute == BigInt::from(1)) == (edge_width == BigInt::from(1)));
            let _ = writeln!(out, "width = {brute} (edge normals: {edge_width} along {dir})");
        }
    }
    Ok(Outcome { stdout: out, stderr: String::new(), code: if agree { EXIT_OK } else { EXIT_FAILURE } })
}

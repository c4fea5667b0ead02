#pragma once

// File formats shared by the CLI, tests and bindings: state JSON,
// decomposition JSON, verdict / entanglement / audit reports and the CSV
// emitters. All numbers are printed with 17 significant digits, '.' decimal
// separator, no locale, so identical inputs produce byte-identical output
// and doubles round-trip losslessly.

#include <string>

#include "blochgeo/bloch.hpp"
#include "blochgeo/bounds.hpp"
#include "blochgeo/ensembles.hpp"
#include "blochgeo/entanglement.hpp"

namespace blochgeo {

/// %.17g with non-finite values spelled nan/inf.
std::string format_double(double v);

/// State JSON: {"dims":[...],"matrix":[[re,im],...]} row-major, D^2 pairs.
std::string state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const std::string& text);

std::string decomposition_to_json(const BlochDecomposition& d);
BlochDecomposition decomposition_from_json(const std::string& text);

std::string verdict_to_json(const RegionVerdict& v);
std::string entanglement_to_json(const EntanglementReport& rep);

/// Decomposition plus model point and Bloch lengths, as emitted by
/// `blochgeo decompose`.
std::string decompose_result_to_json(const DensityMatrix& rho);

/// Audit report JSON with schema version "v1".
std::string audit_to_json(const AuditReport& report);

/// Point-cloud CSV: x,y,z,purity,concurrence,pt_min_eig,verdict,family,p1,p2,
/// seed_offset.
std::string point_cloud_to_csv(const std::vector<SampleRecord>& records);

/// Surface mesh CSV: x,y,z_lower,z_upper over an n x n grid of [0,1]^2;
/// empty-domain cells carry nan.
std::string surface_mesh_csv(int grid);

/// Writes atomically (temp file + rename).
void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace blochgeo

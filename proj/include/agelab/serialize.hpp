#pragma once

#include <string>

#include "agelab/age_transform.hpp"
#include "agelab/kernel.hpp"
#include "agelab/walsh.hpp"

namespace agelab {

/// Transport convention recorded in every kernel / age-representation file;
/// readers must refuse files carrying any other tag.
inline constexpr const char* kTransportConventionTag = "kernel=e^{-i nu a}";

// CSV layouts ------------------------------------------------------------------
//
// Kernel files:
//   # agelab kernel v1
//   # kernel=e^{-i nu a}
//   # nu_max=... n_nu=... sigma_min=... sigma_max=... n_sigma=... channels=... decay=...
//   # hermitian=0 or 1
//   i_nu,j_sigma,n,n_prime,re,im
//   <one row per sample, row-major over (n, n', j, i)>
//
// Age-representation files use the same header with "agelab age v1" and
// columns k_a,j_sigma,n,n_prime,re,im.

std::string kernel_to_csv(const DensityKernel& rho);
DensityKernel kernel_from_csv(const std::string& text);

std::string age_to_csv(const AgeRepresentation& rep);
AgeRepresentation age_from_csv(const std::string& text);

// File helpers ------------------------------------------------------------------

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

void write_kernel_file(const std::string& path, const DensityKernel& rho);
DensityKernel read_kernel_file(const std::string& path);

void write_expansion_file(const std::string& path, const WalshExpansion& rho);
WalshExpansion read_expansion_file(const std::string& path);

}  // namespace agelab

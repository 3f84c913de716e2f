#include "agelab/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace agelab {

namespace {

std::string grid_header(const NuSigmaGrid& g) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "# nu_max=%.17g n_nu=%ld sigma_min=%.17g sigma_max=%.17g n_sigma=%ld "
                "channels=%d decay=%.17g\n",
                g.nu_max, long(g.n_nu), g.sigma_min, g.sigma_max, long(g.n_sigma),
                g.channel_count, g.decay_threshold);
  return buf;
}

template <typename BlockContainer>
std::string samples_to_csv(const char* kind, const NuSigmaGrid& grid,
                           const BlockContainer& blocks, const char* index_name,
                           const char* extra_header = nullptr) {
  std::string out;
  out += std::string("# agelab ") + kind + " v1\n";
  out += std::string("# ") + kTransportConventionTag + "\n";
  out += grid_header(grid);
  if (extra_header) out += extra_header;
  out += std::string(index_name) + ",j_sigma,n,n_prime,re,im\n";
  char buf[128];
  for (int n = 0; n < grid.channel_count; ++n) {
    for (int np = 0; np < grid.channel_count; ++np) {
      const Eigen::MatrixXcd& b = blocks[std::size_t(grid.block_index(n, np))];
      for (Eigen::Index j = 0; j < grid.n_sigma; ++j) {
        for (Eigen::Index i = 0; i < grid.n_nu; ++i) {
          std::snprintf(buf, sizeof buf, "%ld,%ld,%d,%d,%.17g,%.17g\n", long(i), long(j), n, np,
                        b(i, j).real(), b(i, j).imag());
          out += buf;
        }
      }
    }
  }
  return out;
}

struct ParsedGrid {
  NuSigmaGrid grid;
  std::vector<Eigen::MatrixXcd> blocks;
  bool hermitian = false;
};

ParsedGrid parse_samples_csv(const std::string& text, const char* kind) {
  std::istringstream stream(text);
  std::string line;
  if (!std::getline(stream, line) || line != std::string("# agelab ") + kind + " v1")
    throw IoError(std::string("expected '# agelab ") + kind + " v1' header");
  if (!std::getline(stream, line) || line != std::string("# ") + kTransportConventionTag)
    throw IoError("missing or mismatched transport convention tag");
  if (!std::getline(stream, line) || line.rfind("# nu_max=", 0) != 0)
    throw IoError("missing grid header");

  double nu_max = 0, sigma_min = 0, sigma_max = 0, decay = 0;
  long n_nu = 0, n_sigma = 0;
  int channels = 0;
  if (std::sscanf(line.c_str(),
                  "# nu_max=%lf n_nu=%ld sigma_min=%lf sigma_max=%lf n_sigma=%ld channels=%d "
                  "decay=%lf",
                  &nu_max, &n_nu, &sigma_min, &sigma_max, &n_sigma, &channels, &decay) != 7)
    throw IoError("malformed grid header");

  ParsedGrid parsed;
  parsed.grid = NuSigmaGrid::make(nu_max, n_nu, sigma_min, sigma_max, n_sigma, channels, decay);
  parsed.blocks.assign(std::size_t(parsed.grid.channel_pairs()),
                       Eigen::MatrixXcd::Zero(n_nu, n_sigma));

  if (!std::getline(stream, line)) throw IoError("missing column header");
  if (line.rfind("# hermitian=", 0) == 0) {
    parsed.hermitian = line == "# hermitian=1";
    if (!std::getline(stream, line)) throw IoError("missing column header");
  }
  long row_count = 0;
  while (std::getline(stream, line)) {
    if (line.empty()) continue;
    long i = 0, j = 0;
    int n = 0, np = 0;
    double re = 0, im = 0;
    if (std::sscanf(line.c_str(), "%ld,%ld,%d,%d,%lf,%lf", &i, &j, &n, &np, &re, &im) != 6)
      throw IoError("malformed sample row: " + line);
    if (i < 0 || i >= n_nu || j < 0 || j >= n_sigma || n < 0 || n >= channels || np < 0 ||
        np >= channels)
      throw IoError("sample row out of range: " + line);
    parsed.blocks[std::size_t(parsed.grid.block_index(n, np))](i, j) = Complex(re, im);
    ++row_count;
  }
  if (row_count != n_nu * n_sigma * channels * channels)
    throw IoError("sample row count does not match the declared grid");
  return parsed;
}

}  // namespace

std::string kernel_to_csv(const DensityKernel& rho) {
  return samples_to_csv("kernel", rho.grid(), rho.blocks(), "i_nu",
                        rho.hermitian() ? "# hermitian=1\n" : "# hermitian=0\n");
}

DensityKernel kernel_from_csv(const std::string& text) {
  ParsedGrid parsed = parse_samples_csv(text, "kernel");
  DensityKernel rho = DensityKernel::zero(parsed.grid);
  rho.blocks() = std::move(parsed.blocks);
  rho.set_hermitian(parsed.hermitian);
  return rho;
}

std::string age_to_csv(const AgeRepresentation& rep) {
  return samples_to_csv("age", rep.grid(), rep.blocks(), "k_a");
}

AgeRepresentation age_from_csv(const std::string& text) {
  ParsedGrid parsed = parse_samples_csv(text, "age");
  AgeRepresentation rep = AgeRepresentation::zero(parsed.grid);
  rep.blocks() = std::move(parsed.blocks);
  return rep;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_kernel_file(const std::string& path, const DensityKernel& rho) {
  write_text_file(path, kernel_to_csv(rho));
}

DensityKernel read_kernel_file(const std::string& path) {
  return kernel_from_csv(read_text_file(path));
}

void write_expansion_file(const std::string& path, const WalshExpansion& rho) {
  write_text_file(path, to_text(rho));
}

WalshExpansion read_expansion_file(const std::string& path) {
  return expansion_from_text(read_text_file(path));
}

}  // namespace agelab

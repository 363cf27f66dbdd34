#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "torideg/groebner.hpp"
#include "torideg/orders.hpp"

namespace torideg {

/// Catalog entry of a bundled dataset. Paths are relative to the data directory.
struct DatasetInfo {
  std::string name;
  std::string description;
  std::string provenance;
  std::string ideal_file;
  std::optional<std::string> rays_file;
  std::optional<std::string> matrix_file;
  /// "max" or "min". Min-convention ray and matrix data are negated on load.
  std::string convention = "max";
  std::size_t generators = 0;
  /// CRC-32 of every file, lowercase hex.
  std::map<std::string, std::string> checksums;
};

/// $TORIDEG_DATA if set, else the directory the library was built against.
std::filesystem::path data_directory();

/// Entries of catalog.json in `dir`.
std::vector<DatasetInfo> dataset_catalog(const std::filesystem::path& dir = data_directory());

/// Lowercase hex CRC-32 of a byte string.
std::string crc32_hex(std::string_view bytes);

class Dataset {
 public:
  /// Loads a catalog entry and verifies checksums, generator count and the
  /// shape of the ray and matrix files.
  static Dataset load(const std::string& name, const std::filesystem::path& dir = data_directory());

  const DatasetInfo& info() const { return info_; }
  const Ideal& ideal() const { return ideal_; }
  /// Named vectors in the max convention.
  const std::map<std::string, ZVector>& rays() const { return rays_; }
  /// Auxiliary value matrix (max convention) with the grading rows prepended.
  const std::optional<ZMatrix>& value_matrix() const { return matrix_; }

  /// Resolves `name` or `name+name+...`. Besides the ray table, e<ijk>,
  /// f<ij>, g<abcdef> = f<ef> + e<cde> + e<cdf> and E<i> = sum of e<T> with
  /// i in T are understood on rings whose variables are p<ijk>.
  ZVector resolve(std::string_view expression) const;
  /// Comma-separated list of expressions.
  ZMatrix resolve_list(std::string_view list) const;

 private:
  Dataset(DatasetInfo info, Ideal ideal) : info_(std::move(info)), ideal_(std::move(ideal)) {}
  std::optional<ZVector> resolve_name(const std::string& name) const;
  std::optional<ZVector> plucker_vector(const std::string& name) const;

  DatasetInfo info_;
  Ideal ideal_;
  std::map<std::string, ZVector> rays_;
  std::optional<ZMatrix> matrix_;
};

}  // namespace torideg

#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "neumaier/graph.hpp"
#include "neumaier/serialize.hpp"

namespace neumaier {

struct CatalogEntry {
  // Canonical certificate of the graph.
  std::string id;
  NeumaierParams params;
  nlohmann::ordered_json group;  // descriptor string or group object
  ElementSet subgroup;
  ElementSet connection;
  // Sorted set of: enumerated, construction1, construction2, theorem2,
  // partial-spread-srg, imported.
  std::vector<std::string> provenance;
  std::uint64_t multiplicity = 1;
  std::string created;
  std::string updated;
  // Set in lenient mode when re-verification failed.
  std::optional<std::string> flagged;
};

Json entry_to_json(const CatalogEntry& e);
CatalogEntry entry_from_json(const nlohmann::json& j);

// Rebuilds the graph, checks it is Neumaier with the stored subgroup and
// parameters, and that the certificate equals the id. Returns the reason
// for rejection, or nullopt.
std::optional<std::string> reverify(const CatalogEntry& e, std::uint64_t canonical_budget);

// Thrown by strict loads; bad entries have already been moved to the
// quarantine directory.
class CatalogCorrupt : public InvalidInput {
 public:
  CatalogCorrupt(const std::string& message, std::vector<std::string> quarantined)
      : InvalidInput("CorruptCatalog", message), quarantined_(std::move(quarantined)) {}
  const std::vector<std::string>& quarantined() const noexcept { return quarantined_; }

 private:
  std::vector<std::string> quarantined_;
};

enum class LoadMode { strict, lenient };

// A directory of <fnv64(id)>.json files, one per isomorphism class.
// Single-writer: callers must not share a directory across processes.
class Catalog {
 public:
  explicit Catalog(std::filesystem::path dir);

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path quarantine_dir() const { return dir_ / "quarantine"; }

  // ISO-8601 UTC timestamps; replaceable for reproducible output.
  void set_clock(std::function<std::string()> clock) { clock_ = std::move(clock); }
  void set_canonical_budget(std::uint64_t b) { canonical_budget_ = b; }

  // Entries sorted by id. Unparsable files are always quarantined. Strict
  // mode quarantines entries that fail re-verification and then throws
  // CatalogCorrupt; lenient mode keeps them with `flagged` set.
  std::vector<CatalogEntry> load(LoadMode mode = LoadMode::strict);

  // Verifies the instance, computes its certificate and merges it into the
  // entry with that id (multiplicity adds, provenance is unioned). Throws
  // InvalidInput("NotNeumaier") when the instance does not verify.
  CatalogEntry add(const CayleyInstance& instance, std::uint64_t multiplicity = 1);

  // Recomputes every id and merges entries that share a certificate.
  // Returns the number of entries removed.
  std::size_t dedupe();

  // JSON lines, one entry per line, sorted by id.
  std::string export_jsonl();
  // One graph6 line per entry, sorted by id.
  std::string export_graph6();
  // Reads export_jsonl output. New ids are stored verbatim; existing ones
  // are merged. Entries failing re-verification throw CatalogCorrupt.
  std::size_t import_jsonl(const std::string& text);

  std::filesystem::path path_for(const std::string& id) const;

 private:
  void write(const CatalogEntry& e);
  std::optional<CatalogEntry> read(const std::string& id);
  CatalogEntry merge(CatalogEntry into, const CatalogEntry& from);

  std::filesystem::path dir_;
  std::function<std::string()> clock_;
  std::uint64_t canonical_budget_;
};

std::string utc_now();

}  // namespace neumaier

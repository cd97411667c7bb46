#include "neumaier/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <map>
#include <sstream>

#include "neumaier/canonical.hpp"
#include "neumaier/enumeration.hpp"
#include "neumaier/graph_io.hpp"
#include "neumaier/hash.hpp"

namespace neumaier {

namespace fs = std::filesystem;

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json entry_to_json(const CatalogEntry& e) {
  Json out{{"id", e.id},
           {"params", params_to_json(e.params)},
           {"group", e.group},
           {"subgroup", e.subgroup},
           {"connection_set", e.connection},
           {"provenance", e.provenance},
           {"multiplicity", e.multiplicity},
           {"created", e.created},
           {"updated", e.updated}};
  return out;
}

CatalogEntry entry_from_json(const nlohmann::json& j) {
  try {
    CatalogEntry e;
    e.id = j.at("id").get<std::string>();
    e.params = params_from_json(j.at("params"));
    e.group = j.at("group");
    e.subgroup = j.at("subgroup").get<ElementSet>();
    e.connection = j.at("connection_set").get<ElementSet>();
    e.provenance = j.at("provenance").get<std::vector<std::string>>();
    e.multiplicity = j.at("multiplicity").get<std::uint64_t>();
    e.created = j.at("created").get<std::string>();
    e.updated = j.at("updated").get<std::string>();
    if (e.id.empty() || e.multiplicity == 0) throw ParseError("catalog entry: empty id or zero multiplicity");
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("catalog entry: ") + ex.what());
  }
}

std::optional<std::string> reverify(const CatalogEntry& e, std::uint64_t canonical_budget) {
  try {
    const FiniteGroup g = group_from_json(e.group);
    const Subgroup h(g, make_element_set(g, e.subgroup));
    const CayleyGraph c = make_cayley_graph(g, e.connection);
    const auto v = strictly_neumaier_check(c, h);
    if (!v) return "not Neumaier: " + v.failure().code + " " + v.failure().detail;
    if (!(v->params == e.params)) return "parameters differ from the stored ones";
    if (graph_certificate(g, c.connection, canonical_budget) != e.id) return "certificate does not match id";
  } catch (const Error& ex) {
    return ex.code() + ": " + ex.what();
  }
  return std::nullopt;
}

Catalog::Catalog(fs::path dir) : dir_(std::move(dir)), clock_(utc_now), canonical_budget_(default_node_budget(5'000'000)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec || !fs::is_directory(dir_)) throw InvalidInput("cannot create catalog directory " + dir_.string());
}

fs::path Catalog::path_for(const std::string& id) const {
  Fnv1a h;
  h.add(id);
  return dir_ / (h.hex() + ".json");
}

void Catalog::write(const CatalogEntry& e) {
  const fs::path p = path_for(e.id);
  const fs::path tmp = p.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw InvalidInput("cannot write " + tmp.string());
    out << entry_to_json(e).dump(2) << '\n';
  }
  fs::rename(tmp, p);
}

std::optional<CatalogEntry> Catalog::read(const std::string& id) {
  const fs::path p = path_for(id);
  if (!fs::exists(p)) return std::nullopt;
  std::ifstream in(p);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception&) {
    throw CatalogCorrupt("corrupt catalog file " + p.string(), {});
  }
  auto e = entry_from_json(j);
  if (e.id != id) throw CatalogCorrupt("hash collision or corrupt file " + p.string(), {});
  return e;
}

CatalogEntry Catalog::merge(CatalogEntry into, const CatalogEntry& from) {
  into.multiplicity += from.multiplicity;
  for (const auto& p : from.provenance) into.provenance.push_back(p);
  std::sort(into.provenance.begin(), into.provenance.end());
  into.provenance.erase(std::unique(into.provenance.begin(), into.provenance.end()), into.provenance.end());
  into.created = std::min(into.created, from.created);
  into.updated = clock_();
  return into;
}

std::vector<CatalogEntry> Catalog::load(LoadMode mode) {
  std::vector<fs::path> files;
  for (const auto& de : fs::directory_iterator(dir_)) {
    if (de.is_regular_file() && de.path().extension() == ".json") files.push_back(de.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CatalogEntry> out;
  std::vector<std::string> quarantined;
  auto quarantine = [&](const fs::path& p) {
    fs::create_directories(quarantine_dir());
    fs::rename(p, quarantine_dir() / p.filename());
    quarantined.push_back(p.filename().string());
  };
  for (const auto& p : files) {
    CatalogEntry e;
    try {
      std::ifstream in(p);
      e = entry_from_json(nlohmann::json::parse(in));
      if (path_for(e.id) != p) throw ParseError("file name does not match id");
    } catch (const std::exception&) {
      quarantine(p);
      continue;
    }
    if (auto why = reverify(e, canonical_budget_)) {
      if (mode == LoadMode::strict) {
        quarantine(p);
        continue;
      }
      e.flagged = *why;
    }
    out.push_back(std::move(e));
  }
  if (mode == LoadMode::strict && !quarantined.empty()) {
    throw CatalogCorrupt(std::to_string(quarantined.size()) + " bad catalog entries moved to " +
                             quarantine_dir().string(),
                         quarantined);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

CatalogEntry Catalog::add(const CayleyInstance& inst, std::uint64_t multiplicity) {
  if (!inst.subgroup) throw InvalidInput("catalog entries need a subgroup");
  const CayleyGraph c = make_cayley_graph(inst.group, inst.connection);
  const auto v = strictly_neumaier_check(c, *inst.subgroup);
  if (!v) throw InvalidInput("NotNeumaier", v.failure().code + ": " + v.failure().detail);
  if (inst.params && !(*inst.params == v->params)) {
    throw InvalidInput("NotNeumaier", "stated parameters differ from the verified ones");
  }
  CatalogEntry e;
  e.id = graph_certificate(inst.group, c.connection, canonical_budget_);
  e.params = v->params;
  e.group = group_ref(inst.group);
  e.subgroup = inst.subgroup->members();
  e.connection = c.connection;
  e.provenance = {inst.provenance.empty() ? std::string("imported") : inst.provenance};
  e.multiplicity = multiplicity;
  e.created = e.updated = clock_();
  if (auto old = read(e.id)) e = merge(*old, e);
  write(e);
  return e;
}

std::size_t Catalog::dedupe() {
  const auto entries = load(LoadMode::strict);
  std::map<std::string, CatalogEntry> merged;
  std::size_t removed = 0;
  for (const auto& e : entries) {
    const FiniteGroup g = group_from_json(e.group);
    CatalogEntry fresh = e;
    fresh.id = graph_certificate(g, make_element_set(g, e.connection), canonical_budget_);
    auto it = merged.find(fresh.id);
    if (it == merged.end()) {
      merged.emplace(fresh.id, fresh);
    } else {
      it->second = merge(it->second, fresh);
      ++removed;
    }
    if (fresh.id != e.id) fs::remove(path_for(e.id));
  }
  for (const auto& [id, e] : merged) {
    const auto old = std::find_if(entries.begin(), entries.end(), [&](const auto& x) { return x.id == id; });
    if (old == entries.end() || entry_to_json(*old) != entry_to_json(e)) write(e);
  }
  return removed;
}

std::string Catalog::export_jsonl() {
  std::string out;
  for (const auto& e : load(LoadMode::strict)) out += entry_to_json(e).dump() + '\n';
  return out;
}

std::string Catalog::export_graph6() {
  std::string out;
  for (const auto& e : load(LoadMode::strict)) {
    const FiniteGroup g = group_from_json(e.group);
    out += to_graph6(materialize(make_cayley_graph(g, e.connection))) + '\n';
  }
  return out;
}

std::size_t Catalog::import_jsonl(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<CatalogEntry> incoming;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
      throw ParseError("import line " + std::to_string(lineno) + ": not JSON");
    }
    auto e = entry_from_json(j);
    if (auto why = reverify(e, canonical_budget_)) {
      throw CatalogCorrupt("import line " + std::to_string(lineno) + ": " + *why, {});
    }
    incoming.push_back(std::move(e));
  }
  for (const auto& e : incoming) {
    if (auto old = read(e.id)) write(merge(*old, e));
    else write(e);
  }
  return incoming.size();
}

}  // namespace neumaier

#include "sclab/lattice_cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "sclab/errors.hpp"

namespace sclab {

namespace {

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::string lattice_cache_name(const PermutationGroup& G) {
  return "lattice-v" + std::to_string(kLatticeCacheVersion) + "-" + hex(G.content_hash()) + ".json";
}

void save_lattice(const SubgroupLattice& L, const std::filesystem::path& dir) {
  nlohmann::json j;
  j["format"] = "sclab-lattice";
  j["version"] = kLatticeCacheVersion;
  j["group_hash"] = hex(L.group().content_hash());
  j["order"] = L.group().order();
  auto& subs = j["subgroups"] = nlohmann::json::array();
  for (const auto& s : L.subgroups()) subs.push_back(s.generators);

  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto path = dir / lattice_cache_name(L.group());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw IOError("cannot write lattice cache '" + tmp + "'");
    out << j.dump();
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IOError("cannot move lattice cache into place: " + ec.message());
}

std::optional<SubgroupLattice> load_cached_lattice(std::shared_ptr<const PermutationGroup> G,
                                                   const std::filesystem::path& dir) {
  const auto path = dir / lattice_cache_name(*G);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("format") != "sclab-lattice" || j.at("version") != kLatticeCacheVersion) return std::nullopt;
    if (j.at("group_hash") != hex(G->content_hash()) || j.at("order") != G->order())
      return std::nullopt;
    auto gens = j.at("subgroups").get<std::vector<std::vector<Element>>>();
    return SubgroupLattice::from_member_sets(std::move(G), std::move(gens));
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
}

SubgroupLattice load_or_enumerate(std::shared_ptr<const PermutationGroup> G,
                                  const std::filesystem::path& dir, const GroupLimits& limits) {
  if (!dir.empty()) {
    if (auto cached = load_cached_lattice(G, dir)) return std::move(*cached);
  }
  SubgroupLattice L = SubgroupLattice::enumerate(std::move(G), limits);
  if (!dir.empty()) save_lattice(L, dir);
  return L;
}

}  // namespace sclab

#include "isolat/cache.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include <unistd.h>

#include "json.hpp"

namespace isolat {

using nlohmann::json;
namespace fs = std::filesystem;

std::string sha256_hex(const std::string& data) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), md, &len) != 1)
    throw Error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string poset_digest(const Poset& p) { return sha256_hex(canonical_text(p)); }

namespace {

json fingerprint_json(const Fingerprint& f) {
  json j;
  j["order"] = f.order;
  j["histogram"] = json::array();
  for (auto [k, v] : f.element_order_histogram) j["histogram"].push_back({k, v});
  j["abelian"] = f.abelian;
  if (f.abelian_type) {
    j["abelian_type"] = json::array();
    for (const auto& [p, parts] : *f.abelian_type) j["abelian_type"].push_back({p, parts});
  } else {
    j["abelian_type"] = nullptr;
  }
  j["center"] = f.center_order;
  j["derived"] = f.derived_subgroup_order;
  j["exponent"] = f.exponent;
  return j;
}

Fingerprint fingerprint_from_json(const json& j) {
  Fingerprint f;
  f.order = j.at("order").get<int>();
  for (const auto& kv : j.at("histogram")) f.element_order_histogram[kv.at(0).get<int>()] = kv.at(1).get<int>();
  f.abelian = j.at("abelian").get<bool>();
  if (!j.at("abelian_type").is_null()) {
    std::map<int, std::vector<int>> t;
    for (const auto& kv : j.at("abelian_type")) t[kv.at(0).get<int>()] = kv.at(1).get<std::vector<int>>();
    f.abelian_type = t;
  }
  f.center_order = j.at("center").get<int>();
  f.derived_subgroup_order = j.at("derived").get<int>();
  f.exponent = j.at("exponent").get<int>();
  return f;
}

json payload_json(const SubgroupLattice& l, const IsoPoset& iso) {
  json subs = json::array();
  for (const auto& s : l.subgroups()) {
    std::vector<int> gens(s.generators.begin(), s.generators.end());
    subs.push_back({{"bits", s.members.to_hex()}, {"gens", gens}});
  }
  const Poset& p = iso.poset;
  json rows = json::array();
  for (std::size_t a = 0; a < p.size(); ++a) rows.push_back(p.up_set(a).to_hex());
  json fps = json::array();
  for (const auto& f : iso.class_fingerprint) fps.push_back(fingerprint_json(f));
  json j;
  j["order"] = l.parent().order();
  j["subgroups"] = std::move(subs);
  j["iso"] = {{"labels", p.labels()},
              {"leq", std::move(rows)},
              {"classes", iso.classes},
              {"representative", iso.representative},
              {"fingerprints", std::move(fps)}};
  return j;
}

std::atomic<unsigned> temp_counter{0};

}  // namespace

ResultCache::ResultCache(std::string dir, int version) : dir_(std::move(dir)), version_(version) {}

std::string ResultCache::key(const GroupSpec& spec, const Caps& caps) const {
  std::ostringstream s;
  s << "isolat-cache|v" << version_ << "|" << to_string(spec) << "|" << caps.table_cap << "|"
    << caps.validate_cap << "|" << caps.subgroup_cap;
  return sha256_hex(s.str());
}

std::string ResultCache::path(const GroupSpec& spec, const Caps& caps) const {
  return (fs::path(dir_) / (key(spec, caps) + ".json")).string();
}

void ResultCache::store(const GroupSpec& spec, const Caps& caps, const SubgroupLattice& l,
                        const IsoPoset& iso) const {
  json payload = payload_json(l, iso);
  const std::string body = payload.dump();
  json doc;
  doc["version"] = version_;
  doc["spec"] = to_string(spec);
  doc["digest"] = sha256_hex(body);
  doc["payload"] = std::move(payload);

  fs::create_directories(dir_);
  const std::string final_path = path(spec, caps);
  const std::string tmp = final_path + ".tmp." + std::to_string(::getpid()) + "." +
                          std::to_string(temp_counter.fetch_add(1));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + tmp);
    out << doc.dump();
    if (!out.flush()) throw Error("cannot write cache file " + tmp);
  }
  fs::rename(tmp, final_path);
}

std::optional<CachedResult> ResultCache::load(const GroupSpec& spec, const Caps& caps) const {
  const std::string file = path(spec, caps);
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  json doc;
  try {
    doc = json::parse(ss.str());
  } catch (const json::exception& e) {
    throw CorruptEntry(file + ": " + e.what());
  }
  try {
    if (doc.at("version").get<int>() != version_) return std::nullopt;
    const json& payload = doc.at("payload");
    if (sha256_hex(payload.dump()) != doc.at("digest").get<std::string>())
      throw CorruptEntry(file + ": payload digest mismatch");
    if (doc.at("spec").get<std::string>() != to_string(spec))
      throw CorruptEntry(file + ": entry belongs to another spec");

    auto group = std::make_shared<const Group>(construct(spec, caps));
    const auto n = static_cast<std::size_t>(group->order());
    if (payload.at("order").get<std::size_t>() != n) throw CorruptEntry(file + ": order mismatch");
    std::vector<SubgroupSet> subs;
    for (const auto& s : payload.at("subgroups")) {
      SubgroupSet set;
      set.members = BitSet::from_hex(n, s.at("bits").get<std::string>());
      set.order = set.members.count();
      set.members.for_each([&](std::size_t x) { set.elements.push_back(static_cast<Elem>(x)); });
      for (int x : s.at("gens").get<std::vector<int>>()) set.generators.push_back(static_cast<Elem>(x));
      subs.push_back(std::move(set));
    }
    CachedResult r{make_lattice(group, std::move(subs)), {}};

    const json& iso = payload.at("iso");
    auto labels = iso.at("labels").get<std::vector<std::string>>();
    std::vector<BitSet> rows;
    for (const auto& h : iso.at("leq")) rows.push_back(BitSet::from_hex(labels.size(), h.get<std::string>()));
    if (rows.size() != labels.size()) throw CorruptEntry(file + ": order matrix size mismatch");
    r.iso.poset = Poset::from_relation(std::move(labels),
                                       [&](std::size_t a, std::size_t b) { return rows[a].test(b); });
    r.iso.classes = iso.at("classes").get<std::vector<std::vector<std::size_t>>>();
    r.iso.representative = iso.at("representative").get<std::vector<std::size_t>>();
    for (const auto& f : iso.at("fingerprints")) r.iso.class_fingerprint.push_back(fingerprint_from_json(f));
    return r;
  } catch (const json::exception& e) {
    throw CorruptEntry(file + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw CorruptEntry(file + ": " + e.what());
  }
}

CachedResult ResultCache::get_or_compute(const GroupSpec& spec, const Caps& caps, GroupNamer* namer,
                                         std::ostream* warn) const {
  try {
    if (auto hit = load(spec, caps)) return std::move(*hit);
  } catch (const CorruptEntry& e) {
    if (warn) *warn << "warning: corrupt cache entry, recomputing (" << e.what() << ")\n";
  }
  auto group = construct(spec, caps);
  CachedResult r{enumerate_subgroups(group, caps), {}};
  r.iso = build_iso_poset(r.lattice, namer);
  store(spec, caps, r.lattice, r.iso);
  return r;
}

}  // namespace isolat

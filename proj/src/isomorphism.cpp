#include "isolat/isomorphism.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace isolat {

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  os << "order=" << order << " exp=" << exponent << " Z=" << center_order
     << " G'=" << derived_subgroup_order << (abelian ? " abelian" : " nonabelian") << " orders={";
  bool first = true;
  for (auto [o, c] : element_order_histogram) {
    os << (first ? "" : ",") << o << ":" << c;
    first = false;
  }
  os << "}";
  return os.str();
}

Fingerprint fingerprint_from(const GroupInvariants& inv) {
  Fingerprint f;
  f.order = inv.order;
  f.element_order_histogram = inv.element_order_histogram;
  f.abelian = inv.abelian;
  f.abelian_type = inv.abelian_type;
  f.center_order = inv.center_order;
  f.derived_subgroup_order = inv.derived_subgroup_order;
  f.exponent = inv.exponent;
  return f;
}

Fingerprint fingerprint(const Group& g) { return fingerprint_from(invariants(g)); }

bool verify_isomorphism(const Group& a, const Group& b, const std::vector<Elem>& map) {
  const auto n = static_cast<std::size_t>(a.order());
  if (b.order() != a.order() || map.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (Elem y : map) {
    if (y >= n || hit[y]) return false;
    hit[y] = true;
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (map[a.mul(static_cast<Elem>(x), static_cast<Elem>(y))] != b.mul(map[x], map[y])) return false;
  return true;
}

namespace {

std::vector<int> centralizer_orders(const Group& g) {
  const int n = g.order();
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (g.mul(static_cast<Elem>(x), static_cast<Elem>(y)) == g.mul(static_cast<Elem>(y), static_cast<Elem>(x)))
        ++out[static_cast<std::size_t>(x)];
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const Group& a, const Group& b) : a_(a), b_(b) {
    gens_ = a.generators();
    ca_ = centralizer_orders(a);
    cb_ = centralizer_orders(b);
    image_.assign(static_cast<std::size_t>(a.order()), kUnset);
    used_.assign(static_cast<std::size_t>(b.order()), false);
    image_[0] = 0;
    used_[0] = true;
    reached_.push_back(0);
    gen_images_.resize(gens_.size());
  }

  std::optional<std::vector<Elem>> run() {
    if (!search(0)) return std::nullopt;
    std::vector<Elem> out(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) out[i] = static_cast<Elem>(image_[i]);
    return out;
  }

 private:
  static constexpr int kUnset = -1;

  bool search(std::size_t level) {
    if (level == gens_.size()) return reached_.size() == image_.size();
    Elem x = gens_[level];
    for (int y = 1; y < b_.order(); ++y) {
      auto ey = static_cast<Elem>(y);
      if (used_[ey] || b_.element_order(ey) != a_.element_order(x) ||
          cb_[ey] != ca_[x])
        continue;
      gen_images_[level] = ey;
      std::size_t mark = reached_.size();
      if (extend(level) && search(level + 1)) return true;
      // undo
      for (std::size_t i = mark; i < reached_.size(); ++i) {
        used_[static_cast<std::size_t>(image_[reached_[i]])] = false;
        image_[reached_[i]] = kUnset;
      }
      reached_.resize(mark);
    }
    return false;
  }

  // Closes the map over <gens[0..level]>, checking phi(x s) = phi(x) phi(s)
  // for every reached x and every generator s so far.
  bool extend(std::size_t level) {
    for (std::size_t i = 0; i < reached_.size(); ++i) {
      Elem x = reached_[i];
      for (std::size_t k = 0; k <= level; ++k) {
        Elem z = a_.mul(x, gens_[k]);
        Elem w = b_.mul(static_cast<Elem>(image_[x]), gen_images_[k]);
        if (image_[z] != kUnset) {
          if (image_[z] != w) return false;
        } else {
          if (used_[w]) return false;
          image_[z] = w;
          used_[w] = true;
          reached_.push_back(z);
        }
      }
    }
    return true;
  }

  const Group& a_;
  const Group& b_;
  std::vector<Elem> gens_;
  std::vector<int> ca_, cb_;
  std::vector<int> image_;
  std::vector<bool> used_;
  std::vector<Elem> reached_;
  std::vector<Elem> gen_images_;
};

}  // namespace

IsoResult is_isomorphic(const Group& a, const Group& b) {
  IsoResult r;
  if (a.order() != b.order()) return r;
  if (fingerprint(a) != fingerprint(b)) return r;
  auto map = IsoSearch(a, b).run();
  if (!map) return r;
  if (!verify_isomorphism(a, b, *map))
    throw std::logic_error("isomorphism search produced an invalid witness");
  r.isomorphic = true;
  r.witness = std::move(map);
  return r;
}

bool isomorphic(const Group& a, const Group& b) {
  if (a.order() != b.order()) return false;
  Fingerprint fa = fingerprint(a), fb = fingerprint(b);
  if (fa != fb) return false;
  if (fa.abelian) return true;  // abelian types already agree
  return is_isomorphic(a, b).isomorphic;
}

std::vector<std::vector<std::size_t>> partition_classes(const std::vector<Group>& groups) {
  std::vector<Fingerprint> fps;
  fps.reserve(groups.size());
  for (const auto& g : groups) fps.push_back(fingerprint(g));

  std::vector<std::vector<std::size_t>> classes;
  std::map<Fingerprint, std::vector<std::size_t>> buckets;  // fingerprint -> class indices
  for (std::size_t i = 0; i < groups.size(); ++i) {
    auto& bucket = buckets[fps[i]];
    bool placed = false;
    for (std::size_t c : bucket) {
      std::size_t rep = classes[c].front();
      if (fps[i].abelian || is_isomorphic(groups[rep], groups[i]).isomorphic) {
        classes[c].push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) {
      bucket.push_back(classes.size());
      classes.push_back({i});
    }
  }

  // Spot-check transitivity on random triples inside each class.
  std::mt19937_64 rng(0x150c1a55);
  for (const auto& cls : classes) {
    if (cls.size() < 3) continue;
    std::uniform_int_distribution<std::size_t> pick(0, cls.size() - 1);
    for (int t = 0; t < 3; ++t) {
      std::size_t x = cls[pick(rng)], z = cls[pick(rng)];
      if (!isomorphic(groups[x], groups[z]))
        throw std::logic_error("isomorphism classes are not transitive");
    }
  }

  std::sort(classes.begin(), classes.end(), [&](const auto& x, const auto& y) {
    const auto& fx = fps[x.front()];
    const auto& fy = fps[y.front()];
    if (fx.order != fy.order) return fx.order < fy.order;
    if (fx != fy) return fx < fy;
    return x.front() < y.front();
  });
  return classes;
}

}  // namespace isolat

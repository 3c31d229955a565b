#include "gseq/builtin.hpp"

#include <optional>
#include <vector>

namespace gseq {

namespace {

struct GenSpec {
  std::string name;
  int degree;
  // differential: generator index -> power of the (unique) even generator
  int d_power = 0;  // 0: zero differential; k: d = (first gen)^k
};

struct AtomSpec {
  std::vector<GenSpec> gens;
};

std::optional<long long> parse_num(const std::string& s) {
  if (s.empty() || s.size() > 6) return std::nullopt;
  for (char c : s)
    if (!isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  return std::stoll(s);
}

std::optional<AtomSpec> atom_spec(const std::string& name) {
  auto num = [&](size_t prefix) { return parse_num(name.substr(prefix)); };
  if (name.size() >= 2 && name[0] == 'S') {
    auto n = num(1);
    if (!n || *n < 1) return std::nullopt;
    AtomSpec a;
    if (*n % 2 == 1) {
      a.gens.push_back({"x" + std::to_string(*n), static_cast<int>(*n), 0});
    } else {
      a.gens.push_back({"x" + std::to_string(*n), static_cast<int>(*n), 0});
      a.gens.push_back({"x" + std::to_string(2 * *n - 1),
                        static_cast<int>(2 * *n - 1), 2});
    }
    return a;
  }
  if (name.size() >= 3 && name.compare(0, 2, "CP") == 0) {
    auto n = num(2);
    if (!n || *n < 1) return std::nullopt;
    AtomSpec a;
    a.gens.push_back({"x2", 2, 0});
    a.gens.push_back({"x" + std::to_string(2 * *n + 1),
                      static_cast<int>(2 * *n + 1), static_cast<int>(*n + 1)});
    return a;
  }
  if (name.size() >= 3 && name.compare(0, 2, "HP") == 0) {
    auto n = num(2);
    if (!n || *n < 1) return std::nullopt;
    AtomSpec a;
    a.gens.push_back({"x4", 4, 0});
    a.gens.push_back({"x" + std::to_string(4 * *n + 3),
                      static_cast<int>(4 * *n + 3), static_cast<int>(*n + 1)});
    return a;
  }
  if (name.size() >= 3 && name.compare(0, 2, "KQ") == 0) {
    auto n = num(2);
    if (!n || *n < 1) return std::nullopt;
    AtomSpec a;
    a.gens.push_back({"z" + std::to_string(*n), static_cast<int>(*n), 0});
    return a;
  }
  return std::nullopt;
}

std::optional<std::vector<AtomSpec>> factor_specs(const std::string& name) {
  if (auto a = atom_spec(name)) return std::vector<AtomSpec>{*a};
  for (size_t i = 1; i + 1 < name.size(); ++i) {
    if (name[i] != 'x') continue;
    auto left = atom_spec(name.substr(0, i));
    if (!left) continue;
    auto rest = factor_specs(name.substr(i + 1));
    if (!rest) continue;
    rest->insert(rest->begin(), *left);
    return rest;
  }
  return std::nullopt;
}

}  // namespace

std::shared_ptr<FreeDGAlgebra> builtin_model(const std::string& name) {
  auto factors = factor_specs(name);
  if (!factors) return nullptr;
  std::vector<std::pair<std::string, int>> gens;
  std::vector<std::pair<int, std::pair<int, int>>> diffs;  // gen, (base, pow)
  for (const auto& f : *factors) {
    const int base = static_cast<int>(gens.size());
    for (size_t i = 0; i < f.gens.size(); ++i) {
      std::string gname = f.gens[i].name;
      auto taken = [&](const std::string& s) {
        for (const auto& [g, d] : gens)
          if (g == s) return true;
        return false;
      };
      char suffix = 'b';
      while (taken(gname)) gname = f.gens[i].name + std::string(1, suffix++);
      gens.emplace_back(gname, f.gens[i].degree);
      if (f.gens[i].d_power > 0)
        diffs.push_back({base + static_cast<int>(i),
                         {base, f.gens[i].d_power}});
    }
  }
  auto alg = std::make_shared<FreeDGAlgebra>(name, gens);
  for (const auto& [gen, dp] : diffs) {
    Element value = alg->unit();
    for (int k = 0; k < dp.second; ++k) value = value * alg->gen_elem(dp.first);
    alg->set_differential(gen, value);
  }
  alg->freeze();
  if (!alg->validation().valid()) return nullptr;
  return alg;
}

}  // namespace gseq

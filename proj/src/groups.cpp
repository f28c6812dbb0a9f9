#include "brauer_cover/groups.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <unordered_map>

#include "brauer_cover/error.hpp"

namespace brauer_cover {

namespace {

constexpr std::size_t kMaxPermGroupOrder = 200000;

std::int64_t mod(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

void check_generator_names(const std::vector<std::string>& names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty() || n == "1")
      throw Error(ErrorCode::InvalidGroup, "generator name must be nonempty and not \"1\"", n);
    if (!is_identifier(n))
      throw Error(ErrorCode::InvalidGroup,
                  "generator name must be an identifier ([A-Za-z_][A-Za-z0-9_]*)", n);
    if (!seen.insert(n).second)
      throw Error(ErrorCode::InvalidGroup, "duplicate generator name", n);
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::int64_t> compose(std::span<const std::int64_t> x, std::span<const std::int64_t> y) {
  std::vector<std::int64_t> out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = x[static_cast<std::size_t>(y[i])];
  return out;
}

}  // namespace

std::size_t GroupElementHash::operator()(const GroupElement& x) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ x.size();
  for (auto v : x.data()) {
    h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

struct GroupSpec::PermCache {
  std::vector<GroupElement> elements;
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> index;
  std::vector<std::vector<std::size_t>> words;  // generator indices, left to right
};

GroupSpec GroupSpec::abelian(std::vector<CyclicFactor> factors) {
  std::vector<std::string> names;
  for (const auto& f : factors) {
    if (f.order < 0)
      throw Error(ErrorCode::InvalidGroup, "factor order must be >= 1 or infinite", f.name);
    names.push_back(f.name);
  }
  check_generator_names(names);
  GroupSpec g;
  g.kind_ = Kind::AbelianProduct;
  g.factors_ = std::move(factors);
  return g;
}

GroupSpec GroupSpec::permutation(std::int64_t degree, std::vector<PermGenerator> generators) {
  if (degree < 1) throw Error(ErrorCode::InvalidGroup, "permutation degree must be positive");
  std::vector<std::string> names;
  for (const auto& gen : generators) {
    names.push_back(gen.name);
    if (static_cast<std::int64_t>(gen.image.size()) != degree)
      throw Error(ErrorCode::InvalidGroup, "generator has wrong degree", gen.name);
    std::vector<bool> hit(static_cast<std::size_t>(degree), false);
    for (auto v : gen.image) {
      if (v < 0 || v >= degree || hit[static_cast<std::size_t>(v)])
        throw Error(ErrorCode::InvalidGroup, "generator is not a bijection", gen.name);
      hit[static_cast<std::size_t>(v)] = true;
    }
  }
  check_generator_names(names);

  GroupSpec g;
  g.kind_ = Kind::FinitePermutation;
  g.degree_ = degree;
  g.generators_ = std::move(generators);

  auto cache = std::make_shared<PermCache>();
  std::vector<std::int64_t> id(static_cast<std::size_t>(degree));
  std::iota(id.begin(), id.end(), 0);
  cache->elements.emplace_back(id);
  cache->index.emplace(cache->elements.back(), 0);
  cache->words.emplace_back();
  std::vector<std::size_t> layer{0};
  while (!layer.empty()) {
    std::vector<std::size_t> next;
    for (auto xi : layer) {
      for (std::size_t gi = 0; gi < g.generators_.size(); ++gi) {
        GroupElement y(compose(g.generators_[gi].image, cache->elements[xi].data()));
        if (cache->index.contains(y)) continue;
        std::vector<std::size_t> word{gi};
        const auto& tail = cache->words[xi];
        word.insert(word.end(), tail.begin(), tail.end());
        cache->index.emplace(y, cache->elements.size());
        next.push_back(cache->elements.size());
        cache->elements.push_back(std::move(y));
        cache->words.push_back(std::move(word));
        if (cache->elements.size() > kMaxPermGroupOrder)
          throw Error(ErrorCode::InvalidGroup, "permutation group too large to enumerate");
      }
    }
    std::sort(next.begin(), next.end(),
              [&](std::size_t a, std::size_t b) { return cache->elements[a] < cache->elements[b]; });
    layer = std::move(next);
  }
  // Word length equals the BFS layer, so this is layer order with each layer sorted.
  {
    std::vector<std::size_t> order(cache->elements.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (cache->words[a].size() != cache->words[b].size())
        return cache->words[a].size() < cache->words[b].size();
      return cache->elements[a] < cache->elements[b];
    });
    PermCache sorted;
    for (auto i : order) {
      sorted.index.emplace(cache->elements[i], sorted.elements.size());
      sorted.elements.push_back(cache->elements[i]);
      sorted.words.push_back(cache->words[i]);
    }
    *cache = std::move(sorted);
  }
  g.perm_cache_ = std::move(cache);
  return g;
}

GroupSpec GroupSpec::trivial() { return abelian({}); }

GroupSpec GroupSpec::cyclic(std::int64_t order, std::string generator) {
  return abelian({CyclicFactor{std::move(generator), order}});
}

std::vector<std::string> GroupSpec::generator_names() const {
  std::vector<std::string> out;
  if (kind_ == Kind::AbelianProduct) {
    for (const auto& f : factors_) out.push_back(f.name);
  } else {
    for (const auto& g : generators_) out.push_back(g.name);
  }
  return out;
}

bool GroupSpec::is_finite() const {
  if (kind_ == Kind::FinitePermutation) return true;
  return std::none_of(factors_.begin(), factors_.end(), [](const auto& f) { return f.infinite(); });
}

std::optional<std::size_t> GroupSpec::order() const {
  if (kind_ == Kind::FinitePermutation) return perm_cache_->elements.size();
  std::size_t n = 1;
  for (const auto& f : factors_) {
    if (f.infinite()) return std::nullopt;
    n *= static_cast<std::size_t>(f.order);
  }
  return n;
}

GroupElement GroupSpec::identity() const {
  if (kind_ == Kind::AbelianProduct) return GroupElement(std::vector<std::int64_t>(factors_.size(), 0));
  return perm_cache_->elements.front();
}

std::int64_t GroupSpec::factor_index(std::string_view name) const {
  const auto names = generator_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<std::int64_t>(i);
  return -1;
}

GroupElement GroupSpec::generator(std::string_view name) const {
  const auto i = factor_index(name);
  if (i < 0) throw Error(ErrorCode::UnknownGenerator, "unknown generator", std::string(name));
  if (kind_ == Kind::FinitePermutation) return GroupElement(generators_[static_cast<std::size_t>(i)].image);
  std::vector<std::int64_t> v(factors_.size(), 0);
  v[static_cast<std::size_t>(i)] = 1;
  if (factors_[static_cast<std::size_t>(i)].order == 1) v[static_cast<std::size_t>(i)] = 0;
  return GroupElement(std::move(v));
}

bool GroupSpec::contains(const GroupElement& x) const {
  if (kind_ == Kind::FinitePermutation) return perm_cache_->index.contains(x);
  if (x.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (!factors_[i].infinite() && (x[i] < 0 || x[i] >= factors_[i].order)) return false;
  }
  return true;
}

void GroupSpec::check_element(const GroupElement& x) const {
  if (!contains(x)) throw Error(ErrorCode::ElementMismatch, "element does not belong to the group");
}

GroupElement GroupSpec::multiply(const GroupElement& x, const GroupElement& y) const {
  check_element(x);
  check_element(y);
  if (kind_ == Kind::FinitePermutation) return GroupElement(compose(x.data(), y.data()));
  std::vector<std::int64_t> out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    out[i] = x[i] + y[i];
    if (!factors_[i].infinite()) out[i] = mod(out[i], factors_[i].order);
  }
  return GroupElement(std::move(out));
}

GroupElement GroupSpec::inverse(const GroupElement& x) const {
  check_element(x);
  std::vector<std::int64_t> out(x.size());
  if (kind_ == Kind::FinitePermutation) {
    for (std::size_t i = 0; i < x.size(); ++i) out[static_cast<std::size_t>(x[i])] = static_cast<std::int64_t>(i);
    return GroupElement(std::move(out));
  }
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    out[i] = factors_[i].infinite() ? -x[i] : mod(-x[i], factors_[i].order);
  }
  return GroupElement(std::move(out));
}

GroupElement GroupSpec::power(const GroupElement& x, std::int64_t k) const {
  check_element(x);
  if (kind_ == Kind::AbelianProduct) {
    std::vector<std::int64_t> out(x.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      out[i] = factors_[i].infinite() ? x[i] * k : mod(mod(x[i], factors_[i].order) * mod(k, factors_[i].order), factors_[i].order);
    }
    return GroupElement(std::move(out));
  }
  GroupElement base = k < 0 ? inverse(x) : x;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  GroupElement result = identity();
  while (e > 0) {
    if (e & 1U) result = multiply(result, base);
    base = multiply(base, base);
    e >>= 1U;
  }
  return result;
}

std::optional<std::int64_t> GroupSpec::element_order(const GroupElement& x) const {
  check_element(x);
  std::int64_t result = 1;
  if (kind_ == Kind::AbelianProduct) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i].infinite()) {
        if (x[i] != 0) return std::nullopt;
        continue;
      }
      const auto o = factors_[i].order / std::gcd(x[i], factors_[i].order);
      result = std::lcm(result, o);
    }
    return result;
  }
  std::vector<bool> seen(x.size(), false);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (seen[i]) continue;
    std::int64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(x[j])) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<GroupElement> GroupSpec::enumerate() const {
  if (kind_ == Kind::FinitePermutation) return perm_cache_->elements;
  for (const auto& f : factors_) {
    if (f.infinite()) throw Error(ErrorCode::InfiniteGroup, "cannot enumerate an infinite group", f.name);
  }
  std::vector<GroupElement> out;
  std::vector<std::int64_t> cur(factors_.size(), 0);
  while (true) {
    out.emplace_back(cur);
    std::size_t i = factors_.size();
    while (i > 0) {
      --i;
      if (++cur[i] < factors_[i].order) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (factors_.empty()) return out;
  }
}

GroupElement GroupSpec::parse_word(std::string_view text) const {
  const auto word = trim(text);
  if (word.empty()) throw Error(ErrorCode::MalformedWord, "empty word");
  GroupElement acc = identity();
  std::size_t pos = 0;
  while (pos <= word.size()) {
    const auto star = word.find('*', pos);
    const auto token = trim(word.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos));
    if (token.empty()) throw Error(ErrorCode::MalformedWord, "empty factor in word", std::string(text));
    std::string_view name = token;
    std::int64_t exponent = 1;
    if (const auto caret = token.find('^'); caret != std::string_view::npos) {
      name = trim(token.substr(0, caret));
      auto exp_text = trim(token.substr(caret + 1));
      if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
      const auto* first = exp_text.data();
      const auto* last = exp_text.data() + exp_text.size();
      const auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (exp_text.empty() || ec != std::errc{} || ptr != last)
        throw Error(ErrorCode::MalformedWord, "bad exponent", std::string(token));
    }
    GroupElement factor;
    if (name == "1") {
      factor = identity();
    } else {
      if (!is_identifier(name))
        throw Error(ErrorCode::MalformedWord, "bad generator token", std::string(token));
      factor = generator(name);
    }
    acc = multiply(acc, power(factor, exponent));
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return acc;
}

std::string GroupSpec::format_word(const GroupElement& x) const {
  check_element(x);
  std::vector<std::pair<std::string, std::int64_t>> parts;
  if (kind_ == Kind::AbelianProduct) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (x[i] != 0) parts.emplace_back(factors_[i].name, x[i]);
    }
  } else {
    const auto& word = perm_cache_->words[perm_cache_->index.at(x)];
    for (auto gi : word) {
      if (!parts.empty() && parts.back().first == generators_[gi].name) {
        ++parts.back().second;
      } else {
        parts.emplace_back(generators_[gi].name, 1);
      }
    }
  }
  if (parts.empty()) return "1";
  std::string out;
  for (const auto& [name, e] : parts) {
    if (!out.empty()) out += '*';
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

bool operator==(const GroupSpec& a, const GroupSpec& b) {
  return a.kind_ == b.kind_ && a.factors_ == b.factors_ && a.degree_ == b.degree_ &&
         a.generators_ == b.generators_;
}

}  // namespace brauer_cover

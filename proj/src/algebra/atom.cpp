#include "qpnet/atom.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace qpnet {
namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

struct Entry {
  std::string name;
  std::uint64_t hash;
};

class AtomTable {
 public:
  static AtomTable& instance() {
    static AtomTable table;
    return table;
  }

  std::uint32_t intern(std::string_view name) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = index_.find(std::string(name)); it != index_.end())
        return it->second;
    }
    std::unique_lock lock(mutex_);
    auto [it, inserted] =
        index_.try_emplace(std::string(name),
                           static_cast<std::uint32_t>(entries_.size()));
    if (inserted) entries_.push_back({std::string(name), mix(fnv1a(name))});
    return it->second;
  }

  // Entries live in a deque and are never removed, so references stay valid.
  const Entry& entry(std::uint32_t id) {
    std::shared_lock lock(mutex_);
    return entries_[id];
  }

 private:
  std::shared_mutex mutex_;
  std::deque<Entry> entries_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

}  // namespace

Atom::Atom(std::string_view name) {
  if (name.empty()) throw std::invalid_argument("atom name must be nonempty");
  if (name == "0" || name == "1")
    throw std::invalid_argument("atom name may not be a constant");
  id_ = AtomTable::instance().intern(name);
}

const std::string& Atom::name() const {
  return AtomTable::instance().entry(id_).name;
}

std::uint64_t Atom::name_hash() const {
  return AtomTable::instance().entry(id_).hash;
}

AtomSet::AtomSet(std::initializer_list<Atom> atoms)
    : AtomSet(std::vector<Atom>(atoms)) {}

AtomSet::AtomSet(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
  rehash();
}

AtomSet AtomSet::of(std::initializer_list<std::string_view> names) {
  std::vector<Atom> atoms;
  for (auto n : names) atoms.emplace_back(n);
  return AtomSet(std::move(atoms));
}

void AtomSet::rehash() {
  // Matches the default-constructed empty set.
  if (atoms_.empty()) {
    hash_ = 0;
    return;
  }
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (Atom a : atoms_) h += a.name_hash();
  hash_ = mix(h);
}

bool AtomSet::contains(Atom a) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), a);
}

bool AtomSet::includes(const AtomSet& other) const {
  return std::includes(atoms_.begin(), atoms_.end(), other.atoms_.begin(),
                       other.atoms_.end());
}

bool AtomSet::intersects(const AtomSet& other) const {
  auto i = atoms_.begin();
  auto j = other.atoms_.begin();
  while (i != atoms_.end() && j != other.atoms_.end()) {
    if (*i == *j) return true;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return false;
}

std::vector<Atom> AtomSet::sorted_by_name() const {
  std::vector<Atom> out = atoms_;
  std::sort(out.begin(), out.end(), Atom::by_name);
  return out;
}

std::vector<std::string> AtomSet::names() const {
  std::vector<std::string> out;
  for (Atom a : sorted_by_name()) out.push_back(a.name());
  return out;
}

AtomSet operator|(const AtomSet& a, const AtomSet& b) {
  AtomSet r;
  r.atoms_.reserve(a.size() + b.size());
  std::set_union(a.atoms_.begin(), a.atoms_.end(), b.atoms_.begin(),
                 b.atoms_.end(), std::back_inserter(r.atoms_));
  r.rehash();
  return r;
}

AtomSet operator&(const AtomSet& a, const AtomSet& b) {
  AtomSet r;
  std::set_intersection(a.atoms_.begin(), a.atoms_.end(), b.atoms_.begin(),
                        b.atoms_.end(), std::back_inserter(r.atoms_));
  r.rehash();
  return r;
}

AtomSet operator-(const AtomSet& a, const AtomSet& b) {
  AtomSet r;
  std::set_difference(a.atoms_.begin(), a.atoms_.end(), b.atoms_.begin(),
                      b.atoms_.end(), std::back_inserter(r.atoms_));
  r.rehash();
  return r;
}

bool is_short_atom_name(std::string_view name) {
  if (name.empty()) return false;
  auto is_letter = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  };
  if (!is_letter(name[0])) return false;
  for (std::size_t i = 1; i < name.size(); ++i) {
    char c = name[i];
    if (!((c >= '0' && c <= '9') || c == '\'')) return false;
  }
  return true;
}

}  // namespace qpnet

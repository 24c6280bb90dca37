#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace qpnet {

/// An elementary probability symbol.
///
/// Atoms are interned in a process-wide table, so two atoms compare equal
/// exactly when their names are equal. The ordering operators order by
/// interning id, which is stable within a process but otherwise arbitrary;
/// use `by_name` wherever output must be deterministic.
class Atom {
 public:
  explicit Atom(std::string_view name);

  const std::string& name() const;
  std::uint32_t id() const { return id_; }
  /// Hash of the name (not the id), identical across runs.
  std::uint64_t name_hash() const;

  friend bool operator==(Atom a, Atom b) { return a.id_ == b.id_; }
  friend std::strong_ordering operator<=>(Atom a, Atom b) {
    return a.id_ <=> b.id_;
  }

  static bool by_name(Atom a, Atom b) { return a.name() < b.name(); }

 private:
  std::uint32_t id_;
};

/// A set of distinct atoms, kept sorted by id.
class AtomSet {
 public:
  AtomSet() = default;
  AtomSet(std::initializer_list<Atom> atoms);
  explicit AtomSet(std::vector<Atom> atoms);

  /// Convenience for tests and literals: one atom per whitespace-free name.
  static AtomSet of(std::initializer_list<std::string_view> names);

  bool empty() const { return atoms_.empty(); }
  std::size_t size() const { return atoms_.size(); }
  auto begin() const { return atoms_.begin(); }
  auto end() const { return atoms_.end(); }

  bool contains(Atom a) const;
  bool includes(const AtomSet& other) const;
  bool intersects(const AtomSet& other) const;

  /// Order-independent hash built from atom name hashes.
  std::uint64_t hash() const { return hash_; }

  std::vector<Atom> sorted_by_name() const;
  std::vector<std::string> names() const;

  friend AtomSet operator|(const AtomSet& a, const AtomSet& b);
  friend AtomSet operator&(const AtomSet& a, const AtomSet& b);
  friend AtomSet operator-(const AtomSet& a, const AtomSet& b);

  friend bool operator==(const AtomSet& a, const AtomSet& b) {
    return a.hash_ == b.hash_ && a.atoms_ == b.atoms_;
  }
  friend std::strong_ordering operator<=>(const AtomSet& a, const AtomSet& b) {
    return a.atoms_ <=> b.atoms_;
  }

 private:
  void rehash();

  std::vector<Atom> atoms_;
  std::uint64_t hash_ = 0;
};

struct AtomSetHash {
  std::size_t operator()(const AtomSet& s) const { return s.hash(); }
};

struct AtomHash {
  std::size_t operator()(Atom a) const { return a.id(); }
};

/// Whether a name can be printed bare in QP notation (a letter followed by
/// digits or primes); anything else is printed back-quoted.
bool is_short_atom_name(std::string_view name);

}  // namespace qpnet

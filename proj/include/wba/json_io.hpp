#pragma once
#include <json.hpp>

#include <sstream>
#include <string>

#include "wba/double_series.hpp"
#include "wba/el_labeling.hpp"
#include "wba/partition.hpp"
#include "wba/poset.hpp"
#include "wba/rational.hpp"
#include "wba/symfunc.hpp"

/*
 * Serialization helpers: DOT and JSON for posets, JSON for series (exact
 * numerator/denominator strings), CSV for dimension tables.  Everything
 * iterates over sorted containers, so identical inputs give identical
 * bytes.
 */

namespace wba {

using ordered_json = nlohmann::ordered_json;

inline std::string partition_key(const Partition& lam) {
  std::string s;
  for (size_t i = 0; i < lam.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(lam[i]);
  }
  return s;
}

inline std::string poset_to_dot(const FinitePoset& p, bool with_labels) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n";
  for (int i = 0; i < (int)p.elements.size(); ++i)
    os << "  n" << i << " [label=\"" << p.element_str(i) << "\"];\n";
  for (auto& [lo, hi] : p.covers) {
    os << "  n" << lo << " -> n" << hi;
    if (with_labels) {
      EdgeLabel l = el_label(p, lo, hi);
      os << " [label=\"" << l.letter << "^" << l.color << "\"]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

inline ordered_json poset_to_json(const FinitePoset& p, bool with_labels) {
  ordered_json j;
  j["n"] = p.n;
  j["elements"] = ordered_json::array();
  for (int i = 0; i < (int)p.elements.size(); ++i) {
    ordered_json e;
    e["id"] = i;
    e["label"] = p.element_str(i);
    e["rank"] = p.rank[i];
    j["elements"].push_back(e);
  }
  j["covers"] = ordered_json::array();
  for (auto& [lo, hi] : p.covers) {
    ordered_json c;
    c["lo"] = lo;
    c["hi"] = hi;
    if (with_labels) {
      EdgeLabel l = el_label(p, lo, hi);
      c["label"] = std::to_string(l.letter) + "^" + std::to_string(l.color);
    }
    j["covers"].push_back(c);
  }
  return j;
}

inline ordered_json symfunc_to_json(const SymFunc& f) {
  ordered_json arr = ordered_json::array();
  for (auto& [lam, c] : f) {
    ordered_json e;
    e["partition"] = partition_key(lam);
    e["numerator"] = num_str(c);
    e["denominator"] = den_str(c);
    arr.push_back(e);
  }
  return arr;
}

inline ordered_json double_series_to_json(const DoubleSeries& s) {
  ordered_json arr = ordered_json::array();
  for (auto& [key, c] : s.coef) {
    ordered_json e;
    e["x_partition"] = partition_key(key.first);
    e["y_partition"] = partition_key(key.second);
    e["numerator"] = num_str(c);
    e["denominator"] = den_str(c);
    arr.push_back(e);
  }
  return arr;
}

}  // namespace wba

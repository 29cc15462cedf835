#ifndef COLPART_RELATIONS_HPP_
#define COLPART_RELATIONS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "colpart/delta.hpp"
#include "colpart/matrix_group.hpp"
#include "colpart/named.hpp"
#include "colpart/partition.hpp"

namespace colpart {

/// Partitions whose relations have a known short form for unitary u and u^t.
enum class RelationTemplate {
  singletons_wb,  ///< white singleton next to black singleton
  positioner,     ///< abCB
  glob_pair,      ///< aaBB
  u_even,         ///< u_{2l}, l white pairs
  s_k,            ///< k white singletons
};

inline std::string to_string(RelationTemplate t) {
  switch (t) {
    case RelationTemplate::singletons_wb:
      return "singletons-wb";
    case RelationTemplate::positioner:
      return "positioner";
    case RelationTemplate::glob_pair:
      return "glob-pair";
    case RelationTemplate::u_even:
      return "u_2l";
    case RelationTemplate::s_k:
      return "s_k";
  }
  return "?";
}

struct TemplateMatch {
  RelationTemplate kind;
  Partition base;            ///< the template itself
  std::size_t rotation = 0;  ///< p = rotate^rotation(base)
  std::size_t parameter = 0;  ///< l for u_2l, k for s_k, else 0
};

/// Finds the template of which `p` is a rotation, if any.
inline std::optional<TemplateMatch> match_template(Partition const& p) {
  std::size_t const k = p.size();
  if (k == 0) {
    return std::nullopt;
  }
  std::vector<TemplateMatch> candidates;
  if (k == 2) {
    candidates.push_back({RelationTemplate::singletons_wb,
                          named::singletons_wb(), 0, 0});
  }
  if (k == 4) {
    candidates.push_back({RelationTemplate::positioner,
                          named::positioner_wwbb(), 0, 0});
    candidates.push_back({RelationTemplate::glob_pair, named::glob_pair(), 0, 0});
  }
  if (k % 2 == 0) {
    candidates.push_back({RelationTemplate::u_even,
                          named::u(static_cast<int>(k)), 0, k / 2});
  }
  candidates.push_back({RelationTemplate::s_k, named::s(static_cast<int>(k)),
                        0, k});
  for (auto& c : candidates) {
    Partition q = c.base;
    for (std::size_t r = 0; r < k; ++r) {
      if (q == p) {
        c.rotation = r;
        return c;
      }
      q = rotate(q);
    }
  }
  return std::nullopt;
}

struct RelationText {
  Partition partition;
  std::size_t n = 0;
  std::string raw_form;
  std::vector<std::string> free_indices;
  std::optional<std::string> simplified_form;
  std::vector<std::string> simplified_indices;
  std::optional<std::string> note;
};

namespace detail {

inline std::string join(std::vector<std::string> const& parts,
                        std::string const& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out += (i ? sep : "") + parts[i];
  }
  return out;
}

inline std::string u_entry(Color c, std::string const& i, std::string const& j) {
  return std::string(c == Color::white ? "u[" : "u*[") + i + "," + j + "]";
}

inline std::vector<std::string> numbered(std::string const& stem,
                                         std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t t = 1; t <= count; ++t) {
    out.push_back(stem + std::to_string(t));
  }
  return out;
}

inline std::string raw_form(Partition const& p, std::size_t n) {
  if (p.empty()) {
    return "1 = 1";
  }
  auto const is = numbered("i", p.size());
  std::vector<std::string> lhs;
  for (auto const& b : p.blocks()) {
    for (std::size_t t = 1; t < b.size(); ++t) {
      lhs.push_back("delta(" + is[b[t - 1]] + "," + is[b[t]] + ")");
    }
  }
  std::vector<std::string> sums;
  for (std::size_t b = 1; b <= p.block_count(); ++b) {
    sums.push_back("sum_{j" + std::to_string(b) + "=1.." + std::to_string(n) +
                   "}");
  }
  std::vector<std::string> factors;
  for (std::size_t l = 0; l < p.size(); ++l) {
    factors.push_back(
        u_entry(p.color(l), is[l], "j" + std::to_string(p.block_of(l) + 1)));
  }
  return (lhs.empty() ? std::string("1") : join(lhs, "*")) + " = " +
         join(sums, " ") + " " + join(factors, "*");
}

inline void attach_simplified(RelationText& out, TemplateMatch const& m) {
  switch (m.kind) {
    case RelationTemplate::singletons_wb:
      out.simplified_form = "sum_k u[k,j] = sum_l u[i,l]";
      out.simplified_indices = {"i", "j"};
      break;
    case RelationTemplate::positioner:
      out.simplified_form =
          "u[i,j]*(sum_{k1} u[k1,j1]) = (sum_{l1} u[i1,l1])*u[i,j]";
      out.simplified_indices = {"i", "j", "i1", "j1"};
      break;
    case RelationTemplate::glob_pair:
      out.simplified_form = "u*[i,j]*u[k,l] = u[i,j]*u*[k,l]";
      out.simplified_indices = {"i", "j", "k", "l"};
      break;
    case RelationTemplate::u_even: {
      std::vector<std::string> lhs;
      std::vector<std::string> rhs;
      for (std::size_t t = 1; t <= m.parameter; ++t) {
        auto const i = "i" + std::to_string(t);
        auto const j = "j" + std::to_string(t);
        lhs.push_back(u_entry(Color::white, i, j));
        rhs.push_back(u_entry(Color::black, i, j));
        out.simplified_indices.push_back(i);
        out.simplified_indices.push_back(j);
      }
      out.simplified_form = join(lhs, "*") + " = " + join(rhs, "*");
      break;
    }
    case RelationTemplate::s_k: {
      std::vector<std::string> factors;
      for (std::size_t t = 1; t <= m.parameter; ++t) {
        auto const i = "i" + std::to_string(t);
        auto const j = "j" + std::to_string(t);
        factors.push_back("(sum_{" + j + "} " + u_entry(Color::white, i, j) +
                          ")");
        out.simplified_indices.push_back(i);
      }
      out.simplified_form = "1 = " + join(factors, "*");
      break;
    }
  }
  out.note = "template " + to_string(m.kind) + " (" + render(m.base) + ")";
  if (m.rotation != 0) {
    *out.note += " rotated " + std::to_string(m.rotation) + " time" +
                 (m.rotation == 1 ? "" : "s");
  }
}

}  // namespace detail

/// The relation R_p(u) in ASCII, plus the short form when p is a rotation
/// of one of the templates.
inline RelationText emit(Partition const& p, std::size_t n) {
  if (n < 1) {
    throw DimensionError("emit needs n >= 1");
  }
  RelationText out;
  out.partition = p;
  out.n = n;
  out.raw_form = detail::raw_form(p, n);
  out.free_indices = detail::numbered("i", p.size());
  if (auto m = match_template(p)) {
    detail::attach_simplified(out, *m);
  }
  return out;
}

/// The `.rel` file text: a header line, the quantifier line, the relation,
/// and for template partitions the short form after a comment line.
inline std::string to_rel(RelationText const& r) {
  std::string out = "n=" + std::to_string(r.n) + "  p=" + render(r.partition) +
                    "\n";
  out += "forall " + detail::join(r.free_indices, ",") + ":\n";
  out += r.raw_form + "\n";
  if (r.simplified_form) {
    out += "# equivalent for unitary u and u^t, " + r.note.value_or("") + "\n";
    out += "forall " + detail::join(r.simplified_indices, ",") + ":\n";
    out += *r.simplified_form + "\n";
  }
  return out;
}

/// Whether R_p holds at the invertible matrix g with commuting entries, i.e.
/// whether g fixes t(p) under the colored action.
inline bool evaluate_commutative(Partition const& p, Matrix const& g) {
  if (!g.is_invertible()) {
    throw PreconditionError("evaluate_commutative: matrix is singular");
  }
  auto const t = ExactTensor::from(t_vector(p, g.size()));
  return apply_group_element(g, t) == t;
}

/// R_p at g evaluated term by term from its sum form: for every beta,
/// delta_p(beta) against the sum over block values of the products of
/// g or conj(g) entries.
inline bool evaluate_raw(Partition const& p, Matrix const& g) {
  std::size_t const n = g.size();
  std::size_t const k = p.size();
  std::size_t const volume = tensor_volume(n, k);
  Matrix const gbar = g.conj();
  std::size_t const b = p.block_count();
  std::vector<std::size_t> beta1(k);
  for (std::size_t f = 0; f < volume; ++f) {
    auto const beta = unflatten(f, n, k);
    for (std::size_t l = 0; l < k; ++l) {
      beta1[l] = beta[l] + 1;
    }
    Cyc rhs;
    std::vector<std::size_t> j(b, 0);
    while (true) {
      Cyc term(1);
      for (std::size_t l = 0; l < k && !term.is_zero(); ++l) {
        Matrix const& m = p.color(l) == Color::white ? g : gbar;
        term = term * m(beta[l], j[p.block_of(l)]);
      }
      rhs += term;
      std::size_t t = 0;
      while (t < b && ++j[t] == n) {
        j[t++] = 0;
      }
      if (t == b) {
        break;
      }
    }
    if (rhs != Cyc(static_cast<long>(delta(p, beta1)))) {
      return false;
    }
  }
  return true;
}

/// The short form of a template evaluated literally at g, over all values
/// of its free indices.
inline bool evaluate_simplified(TemplateMatch const& m, Matrix const& g) {
  std::size_t const n = g.size();
  std::vector<Cyc> row(n);
  std::vector<Cyc> col(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      row[i] += g(i, j);
      col[j] += g(i, j);
    }
  }
  switch (m.kind) {
    case RelationTemplate::singletons_wb:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (col[j] != row[i]) {
            return false;
          }
        }
      }
      return true;
    case RelationTemplate::positioner:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t i1 = 0; i1 < n; ++i1) {
            for (std::size_t j1 = 0; j1 < n; ++j1) {
              if (g(i, j) * col[j1] != row[i1] * g(i, j)) {
                return false;
              }
            }
          }
        }
      }
      return true;
    case RelationTemplate::glob_pair:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t l = 0; l < n; ++l) {
              if (g(i, j).conj() * g(k, l) != g(i, j) * g(k, l).conj()) {
                return false;
              }
            }
          }
        }
      }
      return true;
    case RelationTemplate::u_even: {
      std::size_t const entries = n * n;
      std::size_t const volume = tensor_volume(entries, m.parameter);
      for (std::size_t f = 0; f < volume; ++f) {
        auto const picks = unflatten(f, entries, m.parameter);
        Cyc lhs(1);
        Cyc rhs(1);
        for (auto e : picks) {
          lhs = lhs * g(e / n, e % n);
          rhs = rhs * g(e / n, e % n).conj();
        }
        if (lhs != rhs) {
          return false;
        }
      }
      return true;
    }
    case RelationTemplate::s_k: {
      std::size_t const volume = tensor_volume(n, m.parameter);
      for (std::size_t f = 0; f < volume; ++f) {
        Cyc prod(1);
        for (auto i : unflatten(f, n, m.parameter)) {
          prod = prod * row[i];
        }
        if (prod != Cyc(1)) {
          return false;
        }
      }
      return true;
    }
  }
  return false;
}

}  // namespace colpart

#endif  // COLPART_RELATIONS_HPP_

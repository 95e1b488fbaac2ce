#include "anyonkit/model.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

namespace anyonkit {

char label_char(Label l) { return "ABCDEFGH"[int(l)]; }

Label label_from_char(char c) {
  if (c < 'A' || c > 'H') throw std::invalid_argument(std::string("unknown anyon label ") + c);
  return Label(c - 'A');
}

std::string label_name(Label l) { return std::string(1, label_char(l)); }

int f_rank(Label l) {
  for (int i = 0; i < 8; ++i)
    if (kFBasisOrder[i] == l) return i;
  return -1;
}

std::vector<Label> AnyonModel::labels() const {
  std::vector<Label> out;
  for (int i = 0; i < num_labels; ++i) out.push_back(Label(i));
  return out;
}

std::set<Label> AnyonModel::fuse(Label a, Label b) const {
  std::set<Label> out;
  for (Label c : labels())
    if (admissible(a, b, c)) out.insert(c);
  return out;
}

std::vector<Label> AnyonModel::f_cols(Label a, Label b, Label c, Label d) const {
  std::vector<Label> out;
  for (Label m : kFBasisOrder)
    if (int(m) < num_labels && admissible(a, b, m) && admissible(m, c, d)) out.push_back(m);
  return out;
}

std::vector<Label> AnyonModel::f_rows(Label a, Label b, Label c, Label d) const {
  std::vector<Label> out;
  for (Label n : kFBasisOrder)
    if (int(n) < num_labels && admissible(b, c, n) && admissible(a, n, d)) out.push_back(n);
  return out;
}

const Mat& AnyonModel::f_block(Label a, Label b, Label c, Label d) const {
  auto it = f_blocks.find({a, b, c, d});
  if (it == f_blocks.end())
    throw std::domain_error("no admissible F block F^{" + label_name(a) + label_name(b) +
                            label_name(c) + "}_" + label_name(d));
  return it->second;
}

const Cyc& AnyonModel::f_symbol(Label a, Label b, Label c, Label d, Label n, Label m) const {
  if (!admissible(a, b, m))
    throw std::domain_error("F index: vertex (" + label_name(a) + "," + label_name(b) + ") -> " +
                            label_name(m) + " is inadmissible");
  if (!admissible(m, c, d))
    throw std::domain_error("F index: vertex (" + label_name(m) + "," + label_name(c) + ") -> " +
                            label_name(d) + " is inadmissible");
  if (!admissible(b, c, n))
    throw std::domain_error("F index: vertex (" + label_name(b) + "," + label_name(c) + ") -> " +
                            label_name(n) + " is inadmissible");
  if (!admissible(a, n, d))
    throw std::domain_error("F index: vertex (" + label_name(a) + "," + label_name(n) + ") -> " +
                            label_name(d) + " is inadmissible");
  const Mat& blk = f_block(a, b, c, d);
  auto rows = f_rows(a, b, c, d);
  auto cols = f_cols(a, b, c, d);
  int i = int(std::find(rows.begin(), rows.end(), n) - rows.begin());
  int j = int(std::find(cols.begin(), cols.end(), m) - cols.begin());
  return blk.at(i, j);
}

const Cyc& AnyonModel::r_symbol(Label a, Label b, Label c) const {
  auto it = r_symbols.find({a, b, c});
  if (it == r_symbols.end())
    throw std::domain_error("inadmissible R-symbol R^{" + label_name(a) + label_name(b) + "}_" +
                            label_name(c));
  return it->second;
}

std::string AnyonModel::fingerprint() const {
  // FNV-1a over a canonical rendering of the full dataset.
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ull;
    }
  };
  mix(name);
  for (int a = 0; a < num_labels; ++a)
    for (int b = 0; b < num_labels; ++b)
      for (int c = 0; c < num_labels; ++c) mix(std::to_string(fusion[a][b][c]));
  for (const auto& [k, blk] : f_blocks) {
    mix({label_char(k[0]), label_char(k[1]), label_char(k[2]), label_char(k[3])});
    mix(blk.key());
  }
  for (const auto& [k, v] : r_symbols) {
    mix({label_char(k[0]), label_char(k[1]), label_char(k[2])});
    mix(v.to_string());
  }
  if (s_matrix.rows() > 0) mix(s_matrix.key());
  for (const auto& t : t_diag) mix(t.to_string());
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

void AnyonModel::mutate_f(Label a, Label b, Label c, Label d, Label n, Label m, const Cyc& v) {
  auto rows = f_rows(a, b, c, d);
  auto cols = f_cols(a, b, c, d);
  int i = int(std::find(rows.begin(), rows.end(), n) - rows.begin());
  int j = int(std::find(cols.begin(), cols.end(), m) - cols.begin());
  if (i >= int(rows.size()) || j >= int(cols.size()))
    throw std::domain_error("mutate_f: inadmissible index");
  f_blocks[{a, b, c, d}].at(i, j) = v;
}

void AnyonModel::mutate_r(Label a, Label b, Label c, const Cyc& v) {
  if (!admissible(a, b, c)) throw std::domain_error("mutate_r: inadmissible triple");
  r_symbols[{a, b, c}] = v;
}

int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("ANYONKIT_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? int(hw) : 1;
}

namespace {

std::string tuple_str(std::initializer_list<Label> ls) {
  std::string s = "(";
  bool first = true;
  for (Label l : ls) {
    if (!first) s += ",";
    s += label_char(l);
    first = false;
  }
  return s + ")";
}

// Runs fn(a) for every label index in parallel and merges the per-worker
// reports deterministically.
ConsistencyReport parallel_over_labels(const AnyonModel& m, int threads,
                                       const std::function<void(Label, ConsistencyReport&)>& fn) {
  int nt = std::min(resolve_thread_count(threads), m.num_labels);
  std::vector<ConsistencyReport> parts(m.num_labels);
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int t = 0; t < nt; ++t)
    pool.emplace_back([&] {
      for (;;) {
        int a = next.fetch_add(1);
        if (a >= m.num_labels) return;
        fn(Label(a), parts[a]);
      }
    });
  for (auto& th : pool) th.join();
  ConsistencyReport out;
  for (auto& p : parts) {
    out.checked += p.checked;
    for (auto& v : p.violations) out.violations.push_back(std::move(v));
  }
  return out;
}

}  // namespace

ConsistencyReport verify_pentagon(const AnyonModel& m, int threads) {
  // F^{fcd}_{e;lg} F^{abl}_{e;kf} = sum_h F^{abc}_{g;hf} F^{ahd}_{e;kg} F^{bcd}_{k;lh}
  auto body = [&m](Label a, ConsistencyReport& rep) {
    for (Label b : m.labels())
      for (Label c : m.labels())
        for (Label d : m.labels())
          for (Label e : m.labels())
            for (Label f : m.labels()) {
              if (!m.admissible(a, b, f)) continue;
              for (Label g : m.labels()) {
                if (!m.admissible(f, c, g) || !m.admissible(g, d, e)) continue;
                for (Label l : m.labels()) {
                  if (!m.admissible(c, d, l)) continue;
                  for (Label k : m.labels()) {
                    if (!m.admissible(b, l, k) || !m.admissible(a, k, e)) continue;
                    // lhs needs admissibility of both F's; if one vertex
                    // fails the term is 0 on that side.
                    Cyc lhs;
                    if (m.admissible(f, l, e))
                      lhs = m.f_symbol(f, c, d, e, l, g) * m.f_symbol(a, b, l, e, k, f);
                    Cyc rhs;
                    for (Label h : m.labels()) {
                      if (!m.admissible(b, c, h) || !m.admissible(a, h, g)) continue;
                      if (!m.admissible(h, d, k)) continue;
                      rhs += m.f_symbol(a, b, c, g, h, f) * m.f_symbol(a, h, d, e, k, g) *
                             m.f_symbol(b, c, d, k, l, h);
                    }
                    ++rep.checked;
                    if (lhs != rhs)
                      rep.violations.push_back({"pentagon " + tuple_str({a, b, c, d, e}) +
                                                    " f=" + label_name(f) + " g=" + label_name(g) +
                                                    " k=" + label_name(k) + " l=" + label_name(l),
                                                lhs.to_string(), rhs.to_string()});
                  }
                }
              }
            }
  };
  return parallel_over_labels(m, threads, body);
}

ConsistencyReport verify_hexagon(const AnyonModel& m, int threads) {
  // orientation +1:
  //   R^{ce}_d conj(F^{cab}_{d;ef}) =
  //     sum_g F^{abc}_{d;ge} R^{cb}_g conj(F^{acb}_{d;gf}) R^{ca}_f
  // orientation -1: every R replaced by the inverse braiding conj(R^{..}).
  auto body = [&m](Label a, ConsistencyReport& rep) {
    for (Label b : m.labels())
      for (Label c : m.labels())
        for (Label d : m.labels())
          for (int orient : {+1, -1})
            for (Label e : m.labels()) {
              if (!m.admissible(a, b, e) || !m.admissible(e, c, d)) continue;
              for (Label f : m.labels()) {
                if (!m.admissible(c, a, f) || !m.admissible(f, b, d)) continue;
                Cyc lhs;
                {
                  Cyc r = orient > 0 ? m.r_symbol(c, e, d) : m.r_symbol(e, c, d).conjugate();
                  lhs = r * m.f_symbol(c, a, b, d, e, f).conjugate();
                }
                Cyc rhs;
                for (Label g : m.labels()) {
                  if (!m.admissible(b, c, g) || !m.admissible(a, g, d)) continue;
                  Cyc rg = orient > 0 ? m.r_symbol(c, b, g) : m.r_symbol(b, c, g).conjugate();
                  Cyc rf = orient > 0 ? m.r_symbol(c, a, f) : m.r_symbol(a, c, f).conjugate();
                  rhs += m.f_symbol(a, b, c, d, g, e) * rg *
                         m.f_symbol(a, c, b, d, g, f).conjugate() * rf;
                }
                ++rep.checked;
                if (lhs != rhs)
                  rep.violations.push_back({std::string("hexagon") +
                                                (orient > 0 ? "+" : "-") + " " +
                                                tuple_str({a, b, c, d}) + " e=" + label_name(e) +
                                                " f=" + label_name(f),
                                            lhs.to_string(), rhs.to_string()});
              }
            }
  };
  return parallel_over_labels(m, threads, body);
}

ConsistencyReport verify_unitarity(const AnyonModel& m) {
  ConsistencyReport rep;
  for (const auto& [key, blk] : m.f_blocks) {
    ++rep.checked;
    if (!blk.is_unitary())
      rep.violations.push_back({"unitarity F^{" + label_name(key[0]) + label_name(key[1]) +
                                    label_name(key[2]) + "}_" + label_name(key[3]),
                                "F F^dagger", "I"});
  }
  return rep;
}

ConsistencyReport verify_verlinde(const AnyonModel& m) {
  ConsistencyReport rep;
  int n = m.num_labels;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Cyc sum;
        for (int x = 0; x < n; ++x) {
          Cyc t = m.s_matrix.at(a, x) * m.s_matrix.at(b, x) *
                  m.s_matrix.at(c, x).conjugate();
          sum += t * m.s_matrix.at(0, x).inverse();
        }
        ++rep.checked;
        Cyc expect((long)m.fusion[a][b][c]);
        if (sum != expect)
          rep.violations.push_back({"verlinde " + tuple_str({Label(a), Label(b), Label(c)}),
                                    sum.to_string(), expect.to_string()});
      }
  return rep;
}

ConsistencyReport verify_modular(const AnyonModel& m) {
  ConsistencyReport rep;
  int n = m.num_labels;
  const Mat& S = m.s_matrix;
  auto expect = [&rep](bool ok, const std::string& what) {
    ++rep.checked;
    if (!ok) rep.violations.push_back({what, "lhs", "rhs"});
  };
  Mat St(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) St.at(i, j) = S.at(j, i);
  expect(S == St, "S symmetric");
  expect(S.is_unitary(), "S unitary");
  expect((S * S).is_identity(), "S^2 = I");
  Mat T(n, n);
  for (int i = 0; i < n; ++i) T.at(i, i) = m.t_diag[i];
  Mat ST = S * T;
  expect(ST * ST * ST == S * S, "(ST)^3 = S^2");
  for (const auto& t : m.t_diag)
    expect(t.as_root_of_unity().has_value(), "T entries are roots of unity");
  return rep;
}

}  // namespace anyonkit

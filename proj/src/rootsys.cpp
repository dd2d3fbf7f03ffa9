#include "flagpoly/rootsys.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <sstream>

namespace flagpoly {

CartanType cartan_type(char family, int rank) {
  bool ok = false;
  switch (family) {
    case 'A': ok = rank >= 1; break;
    case 'B': case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 3; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: ok = false;
  }
  if (!ok) {
    std::ostringstream os;
    os << "invalid Cartan type " << family << rank;
    throw InvalidInput(os.str());
  }
  return CartanType{family, rank};
}

CartanType cartan_type_from_string(const std::string& s) {
  if (s.size() < 2) throw InvalidInput("bad Cartan type literal: " + s);
  char fam = s[0];
  int rank = 0;
  try {
    rank = std::stoi(s.substr(1));
  } catch (...) {
    throw InvalidInput("bad Cartan type literal: " + s);
  }
  return cartan_type(fam, rank);
}

long Root::height() const {
  return std::accumulate(coeffs.begin(), coeffs.end(), 0L);
}

bool Root::operator<(const Root& o) const {
  long h = height(), oh = o.height();
  if (h != oh) return h < oh;
  return coeffs < o.coeffs;
}

bool Weight::is_dominant() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](long c) { return c >= 0; });
}

bool Weight::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](long c) { return c == 0; });
}

std::string to_string(const Root& r) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < r.coeffs.size(); ++i)
    os << (i ? "," : "") << r.coeffs[i];
  os << ")";
  return os.str();
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.coeffs.size(); ++i)
    os << (i ? "," : "") << w.coeffs[i];
  os << ")";
  return os.str();
}

long classical_positive_root_count(const CartanType& ct) {
  long n = ct.rank;
  switch (ct.family) {
    case 'A': return n * (n + 1) / 2;
    case 'B': case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return ct.rank == 6 ? 36 : ct.rank == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  return -1;
}

namespace {

// cartan[i][j] = <alpha_j, alpha_i^vee>, 0-based.
std::vector<std::vector<long>> build_cartan(const CartanType& ct) {
  int n = ct.rank;
  std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto edge = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };  // 0-based
  switch (ct.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case 'B':  // alpha_n short
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      a[n - 1][n - 2] = -2;  // <alpha_{n-1}, alpha_n^vee>
      a[n - 2][n - 1] = -1;
      break;
    case 'C':  // alpha_n long
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      a[n - 2][n - 1] = -2;  // <alpha_n, alpha_{n-1}^vee>
      a[n - 1][n - 2] = -1;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case 'E':
      // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4.
      edge(0, 2);
      edge(2, 3);
      edge(1, 3);
      for (int i = 3; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      edge(0, 1);
      edge(2, 3);
      a[2][1] = -2;  // <alpha_2, alpha_3^vee>
      a[1][2] = -1;
      break;
    case 'G':  // alpha_1 short
      a[0][1] = -3;  // <alpha_2, alpha_1^vee>
      a[1][0] = -1;
      break;
  }
  return a;
}

std::vector<long> build_symmetrizer(const CartanType& ct) {
  int n = ct.rank;
  std::vector<long> d(n, 1);
  switch (ct.family) {
    case 'B':
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case 'C':
      d[n - 1] = 2;
      break;
    case 'F':
      d[0] = d[1] = 2;
      break;
    case 'G':
      d[1] = 3;
      break;
    default:
      break;
  }
  return d;
}

}  // namespace

RootSystem build_root_system(const CartanType& ct) {
  RootSystem rs;
  rs.type = cartan_type(ct.family, ct.rank);
  rs.cartan = build_cartan(rs.type);
  rs.symmetrizer = build_symmetrizer(rs.type);
  rs.rho.coeffs.assign(ct.rank, 1);

  // Closure by height: beta + alpha_i is a root iff the alpha_i-string
  // through beta goes up, i.e. p - <beta, alpha_i^vee> > 0 with
  // p = max{k : beta - k alpha_i is a root}. All roots of smaller height
  // are already known when a given height is processed.
  const int n = ct.rank;
  std::set<std::vector<long>> known;
  std::vector<std::vector<long>> current;
  for (int i = 0; i < n; ++i) {
    std::vector<long> simple(n, 0);
    simple[i] = 1;
    known.insert(simple);
    current.push_back(simple);
  }
  while (!current.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& beta : current) {
      for (int i = 0; i < n; ++i) {
        long pairing_i = 0;
        for (int j = 0; j < n; ++j) pairing_i += rs.cartan[i][j] * beta[j];
        long p = 0;
        std::vector<long> down = beta;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !known.count(down)) break;
          ++p;
        }
        if (p - pairing_i > 0) {
          std::vector<long> up = beta;
          up[i] += 1;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    current = std::move(next);
  }

  for (const auto& v : known) rs.positive_roots.push_back(Root{v});
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end());
  for (int k = 0; k < static_cast<int>(rs.positive_roots.size()); ++k)
    rs.root_index_[rs.positive_roots[k].coeffs] = k;

  if (static_cast<long>(rs.positive_roots.size()) !=
      classical_positive_root_count(rs.type))
    throw InvalidInput("positive-root closure does not match the classical count");

  // d_beta = (beta, beta)/2 with (alpha_i, alpha_j) = d_i a_{ij}.
  for (const Root& beta : rs.positive_roots) {
    Int norm2 = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        norm2 += Int(beta.coeffs[i]) * Int(rs.symmetrizer[i]) *
                 Int(rs.cartan[i][j]) * Int(beta.coeffs[j]);
    assert(norm2 % 2 == 0 && norm2 > 0);
    rs.norms_.push_back(norm2 / 2);
  }
  return rs;
}

bool RootSystem::is_positive_root(const Root& r) const {
  return root_index_.count(r.coeffs) > 0;
}

int RootSystem::positive_root_index(const Root& r) const {
  auto it = root_index_.find(r.coeffs);
  return it == root_index_.end() ? -1 : it->second;
}

Int RootSystem::root_norm(const Root& beta) const {
  int idx = positive_root_index(beta);
  if (idx >= 0) return norms_[idx];
  throw InvalidInput("not a positive root of this system: " + to_string(beta));
}

Int RootSystem::pairing(const Weight& lam, const Root& beta) const {
  if (static_cast<int>(lam.coeffs.size()) != rank())
    throw InvalidInput("weight rank mismatch");
  Int d_beta = root_norm(beta);
  Int num = 0;
  for (int j = 0; j < rank(); ++j)
    num += Int(symmetrizer[j]) * Int(beta.coeffs[j]) * Int(lam.coeffs[j]);
  assert(num % d_beta == 0);
  return num / d_beta;
}

RatVec RootSystem::coroot_row(const Root& beta) const {
  Int d_beta = root_norm(beta);
  RatVec row(rank());
  for (int j = 0; j < rank(); ++j) {
    row[j] = Rat(Int(symmetrizer[j]) * Int(beta.coeffs[j]), d_beta);
    row[j].canonicalize();
  }
  return row;
}

Weight RootSystem::simple_root_as_weight(int i) const {
  Weight w;
  w.coeffs.resize(rank());
  for (int k = 0; k < rank(); ++k) w.coeffs[k] = cartan[k][i];
  return w;
}

Weight RootSystem::root_to_weight(const Root& r) const {
  Weight w;
  w.coeffs.assign(rank(), 0);
  for (int k = 0; k < rank(); ++k)
    for (int j = 0; j < rank(); ++j) w.coeffs[k] += cartan[k][j] * r.coeffs[j];
  return w;
}

Weight RootSystem::reflect_weight(int i, const Weight& w) const {
  Weight out = w;
  long ci = w.coeffs[i];
  for (int k = 0; k < rank(); ++k) out.coeffs[k] -= ci * cartan[k][i];
  return out;
}

std::vector<long> RootSystem::reflect_root_vec(int i,
                                               const std::vector<long>& v) const {
  long pairing_i = 0;
  for (int j = 0; j < rank(); ++j) pairing_i += cartan[i][j] * v[j];
  std::vector<long> out = v;
  out[i] -= pairing_i;
  return out;
}

std::string RootSystem::name() const {
  return std::string(1, type.family) + std::to_string(type.rank);
}

Int pairing(const RootSystem& rs, const Weight& lam, const Root& beta) {
  return rs.pairing(lam, beta);
}

Weight ParabolicData::apply_w_i(const Weight& w) const {
  int n = static_cast<int>(w_i_action.size());
  Weight out;
  out.coeffs.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.coeffs[i] += w_i_action[i][j] * w.coeffs[j];
  return out;
}

std::vector<long> ParabolicData::apply_w_i_root(const std::vector<long>& v) const {
  int n = static_cast<int>(w_i_root_action.size());
  std::vector<long> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += w_i_root_action[i][j] * v[j];
  return out;
}

bool ParabolicData::in_levi(int i) const {
  return std::binary_search(levi_set.begin(), levi_set.end(), i);
}

ParabolicData parabolic(const RootSystem& rs, const std::vector<int>& levi) {
  const int n = rs.rank();
  ParabolicData par;
  par.levi_set = levi;
  std::sort(par.levi_set.begin(), par.levi_set.end());
  par.levi_set.erase(std::unique(par.levi_set.begin(), par.levi_set.end()),
                     par.levi_set.end());
  for (int i : par.levi_set)
    if (i < 1 || i > n) throw InvalidInput("Levi index out of range");
  if (static_cast<int>(par.levi_set.size()) == n)
    throw InvalidInput("Levi set I = S is excluded");

  for (const Root& beta : rs.positive_roots) {
    bool in_span = true;
    for (int j = 0; j < n; ++j)
      if (beta.coeffs[j] != 0 && !par.in_levi(j + 1)) in_span = false;
    (in_span ? par.levi_roots : par.phi_p_plus).push_back(beta);
  }
  par.n_p = static_cast<int>(par.phi_p_plus.size());

  // Longest element of W_I by greedy descent: while some alpha_i (i in I)
  // is mapped to a positive root, multiply by s_i on the right.
  std::vector<std::vector<long>> w_root(n, std::vector<long>(n, 0));
  std::vector<std::vector<long>> w_wt(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) w_root[i][i] = w_wt[i][i] = 1;
  auto column = [&](const std::vector<std::vector<long>>& m, int j) {
    std::vector<long> col(n);
    for (int i = 0; i < n; ++i) col[i] = m[i][j];
    return col;
  };
  while (true) {
    int pick = -1;
    for (int i : par.levi_set) {
      std::vector<long> img = column(w_root, i - 1);
      bool positive = std::all_of(img.begin(), img.end(),
                                  [](long c) { return c >= 0; });
      if (positive) {
        pick = i - 1;
        break;
      }
    }
    if (pick < 0) break;
    par.w_i_word.push_back(pick + 1);
    // w := w * s_pick. Columns of w_root become w(s_pick(alpha_j)) with
    // s_pick(alpha_j) = alpha_j - a_{pick,j} alpha_pick; columns of w_wt
    // become w(s_pick(omega_j)) with s_pick(omega_j) = omega_j -
    // delta_{j,pick} alpha_pick and alpha_pick = Cartan column `pick` in
    // fundamental coordinates.
    std::vector<std::vector<long>> nr(n, std::vector<long>(n, 0));
    std::vector<std::vector<long>> nw(n, std::vector<long>(n, 0));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        nr[i][j] = w_root[i][j] - rs.cartan[pick][j] * w_root[i][pick];
        nw[i][j] = w_wt[i][j];
        if (j == pick) {
          long shift = 0;
          for (int k = 0; k < n; ++k) shift += w_wt[i][k] * rs.cartan[k][pick];
          nw[i][j] -= shift;
        }
      }
    w_root = std::move(nr);
    w_wt = std::move(nw);
    if (static_cast<int>(par.w_i_word.size()) >
        static_cast<int>(par.levi_roots.size()))
      throw InvalidInput("w_I descent failed to terminate");
  }
  par.w_i_root_action = w_root;
  par.w_i_action = w_wt;

  // Sanity: involution, permutes Phi_P^+, negates <I>^+.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long s = 0;
      for (int k = 0; k < n; ++k) s += w_wt[i][k] * w_wt[k][j];
      assert(s == (i == j ? 1 : 0));
      (void)s;
    }
  return par;
}

Weight anticanonical_weight(const RootSystem& rs, const ParabolicData& par) {
  Weight acw = rs.rho;
  Weight wrho = par.apply_w_i(rs.rho);
  for (int i = 0; i < rs.rank(); ++i) acw.coeffs[i] += wrho.coeffs[i];

  Weight sum;
  sum.coeffs.assign(rs.rank(), 0);
  for (const Root& beta : par.phi_p_plus) {
    Weight bw = rs.root_to_weight(beta);
    for (int i = 0; i < rs.rank(); ++i) sum.coeffs[i] += bw.coeffs[i];
  }
  if (!(sum == acw))
    throw InvalidInput("rho + w_I(rho) disagrees with the Phi_P^+ sum");
  return acw;
}

bool is_p_regular(const RootSystem& rs, const ParabolicData& par,
                  const Weight& lam) {
  if (static_cast<int>(lam.coeffs.size()) != rs.rank())
    throw InvalidInput("weight rank mismatch");
  for (int i = 1; i <= rs.rank(); ++i) {
    long c = lam.coeffs[i - 1];
    if (par.in_levi(i) ? c != 0 : c <= 0) return false;
  }
  return true;
}

bool in_lambda_p_plus(const RootSystem& rs, const ParabolicData& par,
                      const Weight& lam) {
  if (!lam.is_dominant()) return false;
  for (int i : par.levi_set)
    if (lam.coeffs[i - 1] != 0) return false;
  return true;
}

Weight weight_from_coeffs(std::vector<long> coeffs) {
  return Weight{std::move(coeffs)};
}

Weight scale_weight(const Weight& w, long k) {
  Weight out = w;
  for (long& c : out.coeffs) c *= k;
  return out;
}

Weight add_weights(const Weight& a, const Weight& b) {
  Weight out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i)
    out.coeffs[i] += b.coeffs[i];
  return out;
}

}  // namespace flagpoly

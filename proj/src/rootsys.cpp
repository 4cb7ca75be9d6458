#include "contactgrad/rootsys.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace contactgrad {

namespace {

struct VecLess {
  bool operator()(const IVec& a, const IVec& b) const {
    for (int i = 0; i < a.size(); ++i) {
      if (a(i) != b(i)) return a(i) < b(i);
    }
    return false;
  }
};

// Adjacency with multiplicity: returns the Cartan matrix and the rational
// half-lengths d for the Bourbaki diagram of the given type.
void diagram_data(char type, int rank, IMat& cartan, std::vector<Rat>& d) {
  cartan = IMat::Zero(rank, rank);
  for (int i = 0; i < rank; ++i) cartan(i, i) = 2;
  d.assign(rank, Rat(1));

  auto chain_edge = [&](int i, int j) {
    cartan(i, j) = -1;
    cartan(j, i) = -1;
  };

  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < rank; ++i) chain_edge(i, i + 1);
      break;
    case 'B':
      // alpha_rank short: d = 1/2.
      for (int i = 0; i + 1 < rank; ++i) chain_edge(i, i + 1);
      cartan(rank - 2, rank - 1) = -2;  // <alpha_n, alpha_{n-1}^vee>
      cartan(rank - 1, rank - 2) = -2;
      d[rank - 1] = Rat(1, 2);
      // fix asymmetry: <alpha_n, alpha_{n-1}^vee> = 2(a_{n-1},a_n)/(a_{n-1},a_{n-1})
      // with (a_{n-1},a_n) = -1: = -1; <alpha_{n-1}, alpha_n^vee> = -2.
      cartan(rank - 2, rank - 1) = -1;
      break;
    case 'C':
      // alpha_rank long, the rest short (d = 1/2).
      for (int i = 0; i + 1 < rank; ++i) chain_edge(i, i + 1);
      cartan(rank - 1, rank - 2) = -1;
      cartan(rank - 2, rank - 1) = -2;
      for (int i = 0; i + 1 < rank; ++i) d[i] = Rat(1, 2);
      break;
    case 'D':
      for (int i = 0; i + 1 < rank - 1; ++i) chain_edge(i, i + 1);
      chain_edge(rank - 3, rank - 1);
      break;
    case 'E':
      // Chain 1-3-4-5-..., branch node 2 attached to 4.
      chain_edge(0, 2);
      for (int i = 2; i + 1 < rank; ++i) chain_edge(i, i + 1);
      chain_edge(1, 3);
      break;
    case 'F':
      // 1 - 2 => 3 - 4 with alpha_1, alpha_2 long.
      chain_edge(0, 1);
      chain_edge(2, 3);
      cartan(1, 2) = -1;  // <alpha_3, alpha_2^vee> = 2(-1)/2
      cartan(2, 1) = -2;  // <alpha_2, alpha_3^vee> = 2(-1)/1
      d[2] = Rat(1, 2);
      d[3] = Rat(1, 2);
      break;
    case 'G':
      // alpha_1 short (d = 1/3), alpha_2 long.
      cartan(0, 1) = -3;  // <alpha_2, alpha_1^vee> = 2(-1)/(2/3)
      cartan(1, 0) = -1;
      d[0] = Rat(1, 3);
      break;
    default:
      throw std::invalid_argument("unknown root system type");
  }
}

void check_type_rank(char type, int rank) {
  bool ok = false;
  switch (type) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 3; break;
    // D3 = A3 is admitted: the so*(6) and low-signature orthogonal forms
    // live on it. The Table-ov shaped claims are only made for rank >= 4.
    case 'D': ok = rank >= 3; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: ok = false;
  }
  if (!ok) {
    std::ostringstream msg;
    msg << "invalid root system " << type << rank;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

std::string RootSystem::label() const {
  return std::string(1, type) + std::to_string(rank);
}

IVec RootSystem::weight_coefficients(const IVec& mu) const {
  return cartan * mu;
}

Rat RootSystem::inner(const IVec& a, const IVec& b) const {
  Rat sum = 0;
  for (int i = 0; i < rank; ++i) {
    if (a(i) == 0) continue;
    Rat row = 0;
    for (int j = 0; j < rank; ++j)
      if (b(j) != 0) row += Rat(cartan(i, j) * b(j));
    sum += Rat(a(i)) * d[i] * row;
  }
  return sum;
}

bool RootSystem::is_root(const IVec& v) const { return root_index(v) >= 0; }

int RootSystem::root_index(const IVec& v) const {
  for (size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == v) return static_cast<int>(i);
  return -1;
}

IVec RootSystem::coroot_coordinates(const IVec& mu) const {
  const Rat half_norm = norm2(mu) / 2;
  IVec out(rank);
  for (int i = 0; i < rank; ++i) {
    const Rat c = Rat(mu(i)) * d[i] / half_norm;
    if (c.get_den() != 1)
      throw std::logic_error("coroot coordinates must be integral");
    out(i) = static_cast<int>(c.get_num().get_si());
  }
  return out;
}

bool RootSystem::is_long(const IVec& a) const {
  return norm2(a) == 2;
}

RootSystem build_root_system(char type, int rank) {
  check_type_rank(type, rank);
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  diagram_data(type, rank, rs.cartan, rs.d);

  // Close the simple roots under the simple reflections
  // s_i(v) = v - <v, alpha_i^vee> alpha_i.
  std::set<IVec, VecLess> seen;
  std::vector<IVec> queue;
  for (int i = 0; i < rank; ++i) {
    IVec alpha = IVec::Zero(rank);
    alpha(i) = 1;
    seen.insert(alpha);
    queue.push_back(alpha);
  }
  while (!queue.empty()) {
    IVec v = queue.back();
    queue.pop_back();
    const IVec w = rs.cartan * v;
    for (int i = 0; i < rank; ++i) {
      IVec image = v;
      image(i) -= w(i);
      if (seen.insert(image).second) queue.push_back(image);
    }
  }
  rs.roots.assign(seen.begin(), seen.end());

  for (size_t idx = 0; idx < rs.roots.size(); ++idx) {
    const IVec& v = rs.roots[idx];
    int sign = 0;
    for (int i = 0; i < rank; ++i) {
      if (v(i) == 0) continue;
      if (sign == 0) sign = v(i) > 0 ? 1 : -1;
      if ((v(i) > 0 ? 1 : -1) != sign)
        throw std::logic_error("root with mixed signs");
    }
    if (sign > 0) rs.positive.push_back(static_cast<int>(idx));
  }

  // Highest root: the positive root dominating all others coordinatewise.
  int best = rs.positive.front();
  auto height = [&](const IVec& v) {
    int h = 0;
    for (int i = 0; i < rank; ++i) h += v(i);
    return h;
  };
  for (int idx : rs.positive)
    if (height(rs.roots[idx]) > height(rs.roots[best])) best = idx;
  rs.highest_root = rs.roots[best];
  for (int idx : rs.positive)
    for (int i = 0; i < rank; ++i)
      if (rs.roots[idx](i) > rs.highest_root(i))
        throw std::logic_error("highest root fails to dominate");

  rs.dynkin_marks.resize(rank);
  for (int i = 0; i < rank; ++i) rs.dynkin_marks[i] = rs.highest_root(i);

  // Dominant short root, when there are two lengths.
  const Rat long_norm = rs.norm2(rs.highest_root);
  std::vector<int> dominant_short;
  for (int idx : rs.positive) {
    const IVec& v = rs.roots[idx];
    if (rs.norm2(v) == long_norm) continue;
    const IVec w = rs.weight_coefficients(v);
    bool dominant = true;
    for (int i = 0; i < rank; ++i)
      if (w(i) < 0) dominant = false;
    if (dominant) dominant_short.push_back(idx);
  }
  if (!dominant_short.empty()) {
    if (dominant_short.size() != 1)
      throw std::logic_error("dominant short root is not unique");
    rs.highest_short_root = rs.roots[dominant_short.front()];
  }

  return rs;
}

std::map<int, int> highest_root_in_weights(const RootSystem& rs) {
  const IVec w = rs.weight_coefficients(rs.highest_root);
  std::map<int, int> out;
  for (int i = 0; i < rs.rank; ++i)
    if (w(i) != 0) out[i + 1] = w(i);  // 1-based node labels
  return out;
}

std::set<int> contact_grading_node_set(const RootSystem& rs) {
  std::set<int> out;
  for (const auto& [node, coeff] : highest_root_in_weights(rs)) out.insert(node);
  return out;
}

std::set<int> depth_one_node_set(const RootSystem& rs) {
  std::set<int> out;
  for (int i = 0; i < rs.rank; ++i)
    if (rs.dynkin_marks[i] == 1) out.insert(i + 1);
  return out;
}

std::string serialize(const RootSystem& rs) {
  std::vector<IVec> sorted = rs.roots;
  std::sort(sorted.begin(), sorted.end(), VecLess{});
  std::ostringstream os;
  os << "{\"type\":\"" << rs.label() << "\",\"cartan\":[";
  for (int i = 0; i < rs.rank; ++i) {
    os << (i ? "," : "") << "[";
    for (int j = 0; j < rs.rank; ++j) os << (j ? "," : "") << rs.cartan(i, j);
    os << "]";
  }
  os << "],\"roots\":[";
  for (size_t r = 0; r < sorted.size(); ++r) {
    os << (r ? "," : "") << "[";
    for (int j = 0; j < rs.rank; ++j) os << (j ? "," : "") << sorted[r](j);
    os << "]";
  }
  os << "],\"highest_root\":[";
  for (int j = 0; j < rs.rank; ++j) os << (j ? "," : "") << rs.highest_root(j);
  os << "]}";
  return os.str();
}

}  // namespace contactgrad

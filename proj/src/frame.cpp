#include "xsep/detail/frame.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace xsep::detail {

namespace {

struct WordOp {
  enum class Kind { Perm, T1, T2 } kind;
  int perm_index;
};

using Tuple = std::array<int, 4>;

// Word table: for every S4 rearrangement of the magnitudes, a realization as
// group permutations and the two conjugation substitutions.
const std::map<Tuple, std::vector<WordOp>>& word_table() {
  static const std::map<Tuple, std::vector<WordOp>> table = [] {
    std::map<Tuple, std::vector<WordOp>> t;
    struct Gen {
      Tuple map;
      WordOp op;
    };
    std::vector<Gen> gens;
    for (int k = 0; k < 8; ++k)
      gens.push_back({kNormPermutations[static_cast<size_t>(k)], {WordOp::Kind::Perm, k}});
    gens.push_back({{0, 3, 2, 1}, {WordOp::Kind::T1, 0}});
    gens.push_back({{0, 1, 3, 2}, {WordOp::Kind::T2, 0}});

    Tuple id{0, 1, 2, 3};
    t[id] = {};
    std::vector<Tuple> frontier{id};
    while (!frontier.empty()) {
      std::vector<Tuple> next;
      for (const auto& cur : frontier) {
        for (const auto& g : gens) {
          // Appending g to the word w gives the composite i -> w(g(i)).
          Tuple comp;
          for (int i = 0; i < 4; ++i)
            comp[static_cast<size_t>(i)] =
                cur[static_cast<size_t>(g.map[static_cast<size_t>(i)])];
          if (t.count(comp)) continue;
          auto word = t[cur];
          word.push_back(g.op);
          t[comp] = std::move(word);
          next.push_back(comp);
        }
      }
      frontier = std::move(next);
    }
    return t;
  }();
  return table;
}

}  // namespace

CVec4 arrange(const CVec4& c, const std::array<int, 4>& idx, Frame& frame) {
  const auto& word = word_table().at(idx);
  CVec4 out = c;
  for (const auto& op : word) {
    switch (op.kind) {
      case WordOp::Kind::Perm: {
        const auto& sigma = kNormPermutations[static_cast<size_t>(op.perm_index)];
        frame.push_perm(sigma);
        out = permute(out, sigma);
        break;
      }
      case WordOp::Kind::T1:
        frame.push_t1();
        out = Frame::apply_t1(out);
        break;
      case WordOp::Kind::T2:
        frame.push_t2();
        out = Frame::apply_t2(out);
        break;
    }
  }
  return out;
}

CVec4 sort_magnitudes(const CVec4& c, Frame& frame) {
  auto r = c.magnitudes();
  Tuple idx{0, 1, 2, 3};
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
    return r[static_cast<size_t>(i)] > r[static_cast<size_t>(j)];
  });
  return arrange(c, idx, frame);
}

CVec4 normal_phase_form(const CVec4& c, Frame& frame) {
  auto th = c.phases();
  auto r = c.magnitudes();
  double phi = wrap_angle((th[0] + th[3]) - (th[1] + th[2]));
  CVec4 u{std::exp(cplx(0.0, -th[0])), std::exp(cplx(0.0, -th[1])),
          std::exp(cplx(0.0, -th[2])), std::exp(cplx(0.0, th[0] - th[1] - th[2]))};
  frame.push_phase(u);
  CVec4 out{r[0], r[1], r[2], r[3] * std::exp(cplx(0.0, phi))};
  if (phi < 0.0) {
    frame.push_conj();
    out[3] = std::conj(out[3]);
  }
  return out;
}

}  // namespace xsep::detail

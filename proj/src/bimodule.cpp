#include "qhopf/bimodule.hpp"

#include <map>
#include <tuple>

#include "qhopf/errors.hpp"

namespace qhopf {
namespace {

using V1 = std::map<uint32_t, Scalar>;
using K2 = std::pair<uint32_t, uint32_t>;
using V2 = std::map<K2, Scalar>;
using K3 = std::tuple<uint32_t, uint32_t, uint32_t>;
using V3 = std::map<K3, Scalar>;

template <class M, class K>
void acc(M& m, const K& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = m.find(k);
  if (it == m.end()) {
    m.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) m.erase(it);
}

std::string show1(const V1& v, const std::vector<std::string>& labels) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [i, c] : v) {
    if (!s.empty()) s += " + ";
    s += c.to_string() + "*" + labels[i];
  }
  return s;
}

}  // namespace

Report HopfBimodule::verify() const {
  Report rep;
  rep.subject = "bimodule(" + std::to_string(dim()) + " over " + base.kind_name() + ")";
  const uint32_t nb = base.dim(), nm = dim();
  const Field& f = base.field;

  auto left = [&](uint32_t b, const V1& v) {
    V1 out;
    for (const auto& [m, c] : v)
      for (const auto& [m2, c2] : act_left[b][m]) acc(out, m2, c * c2);
    return out;
  };
  auto right = [&](const V1& v, uint32_t b) {
    V1 out;
    for (const auto& [m, c] : v)
      for (const auto& [m2, c2] : act_right[m][b]) acc(out, m2, c * c2);
    return out;
  };
  auto basis = [&](uint32_t m) {
    V1 v;
    v.emplace(m, Scalar::one(f));
    return v;
  };

  {  // module laws, both sides, plus the bimodule commutation
    uint64_t cases = 0;
    CheckResult assoc_l{"left-action-associative", CheckStatus::Pass, "", 0};
    CheckResult assoc_r{"right-action-associative", CheckStatus::Pass, "", 0};
    CheckResult bimod{"actions-commute", CheckStatus::Pass, "", 0};
    for (uint32_t b1 = 0; b1 < nb && assoc_l.status == CheckStatus::Pass; ++b1)
      for (uint32_t b2 = 0; b2 < nb; ++b2)
        for (uint32_t m = 0; m < nm; ++m) {
          ++cases;
          V1 lhs = left(b1, left(b2, basis(m)));
          V1 rhs;
          for (const auto& [b, c] : base.mu(b1, b2))
            for (const auto& [m2, c2] : act_left[b][m]) acc(rhs, m2, c * c2);
          if (lhs != rhs) {
            assoc_l.status = CheckStatus::Fail;
            assoc_l.witness = "b1=" + base.label(b1) + " b2=" + base.label(b2) + " m=" +
                              labels[m] + ": " + show1(lhs, labels) + " != " + show1(rhs, labels);
            break;
          }
          V1 lhs_r = right(right(basis(m), b1), b2);
          V1 rhs_r;
          for (const auto& [b, c] : base.mu(b1, b2))
            for (const auto& [m2, c2] : act_right[m][b]) acc(rhs_r, m2, c * c2);
          if (lhs_r != rhs_r && assoc_r.status == CheckStatus::Pass) {
            assoc_r.status = CheckStatus::Fail;
            assoc_r.witness = "m=" + labels[m] + " b1=" + base.label(b1) + " b2=" + base.label(b2);
          }
          V1 lc = right(left(b1, basis(m)), b2);
          V1 rc = left(b1, right(basis(m), b2));
          if (lc != rc && bimod.status == CheckStatus::Pass) {
            bimod.status = CheckStatus::Fail;
            bimod.witness = "(" + base.label(b1) + "." + labels[m] + ")." + base.label(b2) +
                            " != " + base.label(b1) + ".(" + labels[m] + "." + base.label(b2) +
                            ")";
          }
        }
    assoc_l.cases = assoc_r.cases = bimod.cases = cases;
    rep.checks.push_back(assoc_l);
    rep.checks.push_back(assoc_r);
    rep.checks.push_back(bimod);
  }

  {  // unit acts as identity on both sides
    CheckResult unit{"unit-acts-trivially", CheckStatus::Pass, "", 0};
    for (uint32_t m = 0; m < nm; ++m) {
      ++unit.cases;
      V1 l, r;
      for (const auto& [b, c] : base.unit()) {
        for (const auto& [m2, c2] : act_left[b][m]) acc(l, m2, c * c2);
        for (const auto& [m2, c2] : act_right[m][b]) acc(r, m2, c * c2);
      }
      if (l != basis(m) || r != basis(m)) {
        unit.status = CheckStatus::Fail;
        unit.witness = "m=" + labels[m] + ": 1.m=" + show1(l, labels) + ", m.1=" + show1(r, labels);
        break;
      }
    }
    rep.checks.push_back(unit);
  }

  {  // comodule laws
    CheckResult col{"left-coaction-coassociative", CheckStatus::Pass, "", 0};
    CheckResult cor{"right-coaction-coassociative", CheckStatus::Pass, "", 0};
    CheckResult cnt{"coaction-counit", CheckStatus::Pass, "", 0};
    CheckResult bic{"coactions-commute", CheckStatus::Pass, "", 0};
    for (uint32_t m = 0; m < nm; ++m) {
      col.cases = cor.cases = cnt.cases = bic.cases = m + 1;
      // (Delta (x) id) delta- vs (id (x) delta-) delta-
      V3 a, b;
      for (const auto& [g, m1, c] : coact_left[m]) {
        for (const auto& [g1, g2, c2] : base.delta(g)) acc(a, K3{g1, g2, m1}, c * c2);
        for (const auto& [g2, m2, c2] : coact_left[m1]) acc(b, K3{g, g2, m2}, c * c2);
      }
      if (a != b && col.status == CheckStatus::Pass) {
        col.status = CheckStatus::Fail;
        col.witness = "m=" + labels[m];
      }
      // (id (x) Delta) delta+ vs (delta+ (x) id) delta+
      V3 c3, d3;
      for (const auto& [m1, g, c] : coact_right[m]) {
        for (const auto& [g1, g2, c2] : base.delta(g)) acc(c3, K3{m1, g1, g2}, c * c2);
        for (const auto& [m2, g2, c2] : coact_right[m1]) acc(d3, K3{m2, g2, g}, c * c2);
      }
      if (c3 != d3 && cor.status == CheckStatus::Pass) {
        cor.status = CheckStatus::Fail;
        cor.witness = "m=" + labels[m];
      }
      // counits
      V1 cl, cr;
      for (const auto& [g, m1, c] : coact_left[m]) acc(cl, m1, c * base.counit(g));
      for (const auto& [m1, g, c] : coact_right[m]) acc(cr, m1, c * base.counit(g));
      if ((cl != basis(m) || cr != basis(m)) && cnt.status == CheckStatus::Pass) {
        cnt.status = CheckStatus::Fail;
        cnt.witness = "m=" + labels[m] + ": (eps(x)id)delta-=" + show1(cl, labels) +
                      ", (id(x)eps)delta+=" + show1(cr, labels);
      }
      // (id (x) delta+) delta- vs (delta- (x) id) delta+ in B (x) M (x) B
      V3 e3, f3;
      for (const auto& [g, m1, c] : coact_left[m])
        for (const auto& [m2, h, c2] : coact_right[m1]) acc(e3, K3{g, m2, h}, c * c2);
      for (const auto& [m1, h, c] : coact_right[m])
        for (const auto& [g, m2, c2] : coact_left[m1]) acc(f3, K3{g, m2, h}, c * c2);
      if (e3 != f3 && bic.status == CheckStatus::Pass) {
        bic.status = CheckStatus::Fail;
        bic.witness = "m=" + labels[m];
      }
    }
    rep.checks.push_back(col);
    rep.checks.push_back(cor);
    rep.checks.push_back(cnt);
    rep.checks.push_back(bic);
  }

  {  // coactions are bimodule morphisms (diagonal B-bimodule structure on B(x)M, M(x)B)
    CheckResult ll{"left-coaction-respects-left-action", CheckStatus::Pass, "", 0};
    CheckResult lr{"left-coaction-respects-right-action", CheckStatus::Pass, "", 0};
    CheckResult rl{"right-coaction-respects-left-action", CheckStatus::Pass, "", 0};
    CheckResult rr{"right-coaction-respects-right-action", CheckStatus::Pass, "", 0};
    uint64_t cases = 0;
    for (uint32_t b = 0; b < nb; ++b)
      for (uint32_t m = 0; m < nm; ++m) {
        ++cases;
        // delta-(b.m) vs sum (b1 * m_(-1)) (x) (b2 . m_0)
        V2 lhs, rhs;
        for (const auto& [m2, c] : act_left[b][m])
          for (const auto& [g, m3, c2] : coact_left[m2]) acc(lhs, K2{g, m3}, c * c2);
        for (const auto& [b1, b2, c] : base.delta(b))
          for (const auto& [g, m1, c2] : coact_left[m])
            for (const auto& [gb, c3] : base.mu(b1, g))
              for (const auto& [m2, c4] : act_left[b2][m1]) acc(rhs, K2{gb, m2}, c * c2 * c3 * c4);
        if (lhs != rhs && ll.status == CheckStatus::Pass) {
          ll.status = CheckStatus::Fail;
          ll.witness = "b=" + base.label(b) + " m=" + labels[m];
        }
        // delta-(m.b) vs sum (m_(-1) * b1) (x) (m_0 . b2)
        V2 lhs2, rhs2;
        for (const auto& [m2, c] : act_right[m][b])
          for (const auto& [g, m3, c2] : coact_left[m2]) acc(lhs2, K2{g, m3}, c * c2);
        for (const auto& [b1, b2, c] : base.delta(b))
          for (const auto& [g, m1, c2] : coact_left[m])
            for (const auto& [gb, c3] : base.mu(g, b1))
              for (const auto& [m2, c4] : act_right[m1][b2]) acc(rhs2, K2{gb, m2}, c * c2 * c3 * c4);
        if (lhs2 != rhs2 && lr.status == CheckStatus::Pass) {
          lr.status = CheckStatus::Fail;
          lr.witness = "m=" + labels[m] + " b=" + base.label(b);
        }
        // delta+(b.m) vs sum (b1 . m_0) (x) (b2 * m_(+1))
        V2 lhs3, rhs3;
        for (const auto& [m2, c] : act_left[b][m])
          for (const auto& [m3, g, c2] : coact_right[m2]) acc(lhs3, K2{m3, g}, c * c2);
        for (const auto& [b1, b2, c] : base.delta(b))
          for (const auto& [m1, g, c2] : coact_right[m])
            for (const auto& [m2, c3] : act_left[b1][m1])
              for (const auto& [gb, c4] : base.mu(b2, g)) acc(rhs3, K2{m2, gb}, c * c2 * c3 * c4);
        if (lhs3 != rhs3 && rl.status == CheckStatus::Pass) {
          rl.status = CheckStatus::Fail;
          rl.witness = "b=" + base.label(b) + " m=" + labels[m];
        }
        // delta+(m.b) vs sum (m_0 . b1) (x) (m_(+1) * b2)
        V2 lhs4, rhs4;
        for (const auto& [m2, c] : act_right[m][b])
          for (const auto& [m3, g, c2] : coact_right[m2]) acc(lhs4, K2{m3, g}, c * c2);
        for (const auto& [b1, b2, c] : base.delta(b))
          for (const auto& [m1, g, c2] : coact_right[m])
            for (const auto& [m2, c3] : act_right[m1][b1])
              for (const auto& [gb, c4] : base.mu(g, b2)) acc(rhs4, K2{m2, gb}, c * c2 * c3 * c4);
        if (lhs4 != rhs4 && rr.status == CheckStatus::Pass) {
          rr.status = CheckStatus::Fail;
          rr.witness = "m=" + labels[m] + " b=" + base.label(b);
        }
      }
    ll.cases = lr.cases = rl.cases = rr.cases = cases;
    rep.checks.push_back(ll);
    rep.checks.push_back(lr);
    rep.checks.push_back(rl);
    rep.checks.push_back(rr);
  }

  rep.info["dim"] = std::to_string(nm);
  rep.info["base"] = base.kind_name();
  return rep;
}

HopfBimodule HopfBimodule::dualize() const {
  const uint32_t nb = base.dim(), nm = dim();
  HopfBimodule d;
  d.base = base.dual_hopf();
  d.labels = labels;  // dual basis reuses the labels
  d.act_left.assign(nb, std::vector<IndexVec>(nm));
  d.act_right.assign(nm, std::vector<IndexVec>(nb));
  d.coact_left.assign(nm, {});
  d.coact_right.assign(nm, {});
  // <b* . m*_a, x> = <b*, x_(-1)> <m*_a, x_0>: transpose the left coaction.
  for (uint32_t x = 0; x < nm; ++x)
    for (const auto& [g, m0, c] : coact_left[x]) d.act_left[g][m0].emplace_back(x, c);
  // <m*_a . b*, x> = <m*_a, x_0> <b*, x_(+1)>: transpose the right coaction.
  for (uint32_t x = 0; x < nm; ++x)
    for (const auto& [m0, g, c] : coact_right[x]) d.act_right[m0][g].emplace_back(x, c);
  // delta-(m*_a) = sum_g b*_g (x) (g-action transposed): coefficient at
  // (g, m*_b) is the coefficient of m_a in g . m_b.
  for (uint32_t b = 0; b < nm; ++b)
    for (uint32_t g = 0; g < nb; ++g)
      for (const auto& [a, c] : act_left[g][b]) d.coact_left[a].emplace_back(g, b, c);
  for (uint32_t b = 0; b < nm; ++b)
    for (uint32_t g = 0; g < nb; ++g)
      for (const auto& [a, c] : act_right[b][g]) d.coact_right[a].emplace_back(b, g, c);
  return d;
}

HopfBimodule translation_bimodule(const Field& f, const CoveringQuiver& q,
                                  const std::vector<std::vector<Character>>& chars) {
  const FiniteGroup& G = q.group();
  const uint32_t ng = G.order(), na = q.num_arrows();
  const auto& ram = q.ramification();

  if (!chars.empty() && chars.size() != ram.size())
    throw input_error("bimodule: one character list per ramification entry expected");
  auto character = [&](size_t entry, uint32_t copy, uint32_t g) -> Scalar {
    if (chars.empty()) return Scalar::one(f);
    if (copy >= chars[entry].size())
      throw input_error("bimodule: missing character for a ramification copy");
    return chars[entry][copy][g];
  };
  if (!chars.empty())
    for (size_t k = 0; k < chars.size(); ++k)
      for (size_t i = 0; i < chars[k].size(); ++i) {
        const Character& ch = chars[k][i];
        if (ch.size() != ng) throw input_error("bimodule: character length != group order");
        if (!ch[G.identity()].is_one()) throw input_error("bimodule: character(e) != 1");
        for (uint32_t a = 0; a < ng; ++a) {
          if (ch[a].is_zero()) throw input_error("bimodule: character value 0");
          for (uint32_t b = 0; b < ng; ++b)
            if (!(ch[G.mul(a, b)] == ch[a] * ch[b]))
              throw input_error("bimodule: character is not multiplicative");
        }
      }

  std::map<uint32_t, size_t> entry_of_rep;
  for (size_t k = 0; k < ram.size(); ++k) entry_of_rep[ram[k].first] = k;

  HopfBimodule m;
  m.base = BaseHopf::group_algebra(f, G);
  for (uint32_t a = 0; a < na; ++a) m.labels.push_back(q.arrow_label(a));
  m.act_left.assign(ng, std::vector<IndexVec>(na));
  m.act_right.assign(na, std::vector<IndexVec>(ng));
  m.coact_left.assign(na, {});
  m.coact_right.assign(na, {});
  Scalar one = Scalar::one(f);
  for (uint32_t id = 0; id < na; ++id) {
    const Arrow& a = q.arrow(id);
    size_t entry = entry_of_rep.at(a.class_rep);
    for (uint32_t g = 0; g < ng; ++g) {
      // g . a(x,c,i) = a(gx,c,i)
      m.act_left[g][id] = {{q.arrow_id(G.mul(g, a.source), a.class_elt, a.copy), one}};
      // a(x,c,i) . g = chi(g) a(xg, g^-1 c g, i)
      uint32_t c2 = G.mul(G.mul(G.inverse(g), a.class_elt), g);
      m.act_right[id][g] = {
          {q.arrow_id(G.mul(a.source, g), c2, a.copy), character(entry, a.copy, g)}};
    }
    m.coact_left[id] = {{a.target, id, one}};
    m.coact_right[id] = {{id, a.source, one}};
  }
  return m;
}

HopfBimodule z2_three_loops_bimodule(const Field& f) {
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  CoveringQuiver q(z2, {{0, 3}});
  Character triv{Scalar::one(f), Scalar::one(f)};
  Character sign{Scalar::one(f), -Scalar::one(f)};
  return translation_bimodule(f, q, {{triv, triv, sign}});
}

}  // namespace qhopf

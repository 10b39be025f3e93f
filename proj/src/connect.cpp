#include "split_internal.hpp"

#include <deque>
#include <numeric>

namespace h3l {

using detail::contains_form;
using detail::plus_minus;

namespace {

// {g(alpha^k, alpha^k)} for |k| up to cap, stopping once the orbit closes.
std::vector<RootForm> orbit(const RootForm& g, const Matrix& AH, std::size_t cap) {
  std::vector<RootForm> out{g};
  for (int dir : {1, -1}) {
    RootForm cur = g;
    for (std::size_t step = 0; step < cap; ++step) {
      cur = pullback_root(cur, AH, dir);
      if (cur == g) break;
      if (!contains_form(out, cur)) out.push_back(cur);
    }
  }
  return out;
}

Connection search(const std::vector<RootForm>& states_base, const std::vector<RootForm>& gamma,
                  const std::vector<RootForm>& lambda, const Matrix& AH, const RootForm& from,
                  const RootForm& to) {
  if (!contains_form(states_base, from) || !contains_form(states_base, to))
    throw std::invalid_argument("form is not in the root or weight system");
  const std::size_t h = from.dim();
  const auto states = plus_minus(states_base);
  const std::size_t cap = 2 * states.size() + 2;

  std::vector<RootForm> accept;
  for (const auto& o : orbit(to, AH, cap))
    for (const RootForm& s : {o, -o})
      if (!contains_form(accept, s)) accept.push_back(s);

  Connection res;
  const auto start_orbit = orbit(from, AH, cap);
  for (const auto& o : start_orbit)
    if (contains_form(accept, o)) {
      res.connected = true;
      res.via_orbit = true;
      return res;
    }

  std::vector<RootForm> T = plus_minus(gamma);
  for (const auto& l : plus_minus(lambda))
    if (!contains_form(T, l)) T.push_back(l);
  T.push_back(RootForm::zero(h));

  // Nodes carry the chain built so far; parents give the chain on success.
  struct Node {
    RootForm form;
    int parent;
    std::size_t mu, beta;
  };
  std::vector<Node> nodes;
  std::deque<std::size_t> queue;
  std::vector<RootForm> seen;
  for (const auto& o : start_orbit)
    if (contains_form(T, o)) {
      seen.push_back(o);
      nodes.push_back({o, -1, 0, 0});
      queue.push_back(nodes.size() - 1);
    }

  auto chain_of = [&](std::size_t id, std::size_t mu, std::size_t beta) {
    std::vector<std::pair<std::size_t, std::size_t>> steps{{mu, beta}};
    std::size_t cur = id;
    while (nodes[cur].parent >= 0) {
      steps.emplace_back(nodes[cur].mu, nodes[cur].beta);
      cur = static_cast<std::size_t>(nodes[cur].parent);
    }
    std::vector<RootForm> chain{nodes[cur].form};
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
      chain.push_back(T[it->first]);
      chain.push_back(T[it->second]);
    }
    return chain;
  };

  while (!queue.empty()) {
    const std::size_t id = queue.front();
    queue.pop_front();
    const RootForm delta = nodes[id].form;
    for (std::size_t i = 0; i < T.size(); ++i)
      for (std::size_t j = i; j < T.size(); ++j) {
        RootForm next = pullback_root(delta + T[i] + T[j], AH, -1);
        if (contains_form(accept, next)) {
          res.connected = true;
          res.chain = chain_of(id, i, j);
          return res;
        }
        if (!contains_form(states, next) || contains_form(seen, next)) continue;
        seen.push_back(next);
        nodes.push_back({std::move(next), static_cast<int>(id), i, j});
        queue.push_back(nodes.size() - 1);
      }
  }
  return res;
}

RootClassPartition partition(const std::vector<RootForm>& base, const std::vector<RootForm>& gamma,
                             const std::vector<RootForm>& lambda, const Matrix& AH) {
  const std::size_t r = base.size();
  std::vector<std::vector<bool>> rel(r, std::vector<bool>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      rel[i][j] = search(base, gamma, lambda, AH, base[i], base[j]).connected;

  bool eq = true;
  for (std::size_t i = 0; i < r; ++i) {
    if (!rel[i][i]) eq = false;
    for (std::size_t j = 0; j < r; ++j) {
      if (rel[i][j] != rel[j][i]) eq = false;
      for (std::size_t k = 0; k < r; ++k)
        if (rel[i][j] && rel[j][k] && !rel[i][k]) eq = false;
    }
  }

  // Classes are the components of the symmetrised relation.
  std::vector<std::size_t> parent(r);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (rel[i][j]) parent[find(i)] = find(j);

  RootClassPartition p;
  p.equivalence_ok = eq;
  std::vector<int> slot(r, -1);
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(p.classes.size());
      p.classes.emplace_back();
    }
    p.classes[static_cast<std::size_t>(slot[root])].push_back(i);
  }
  return p;
}

}  // namespace

Connection connected(const std::vector<RootForm>& gamma, const std::vector<RootForm>& lambda,
                     const Matrix& AH, const RootForm& from, const RootForm& to) {
  return search(gamma, gamma, lambda, AH, from, to);
}

Connection weight_connected(const std::vector<RootForm>& gamma, const std::vector<RootForm>& lambda,
                            const Matrix& AH, const RootForm& from, const RootForm& to) {
  return search(lambda, gamma, lambda, AH, from, to);
}

RootForm literal_bar_gamma(const std::vector<RootForm>& chain, const Matrix& AH, int i) {
  if (i < 0 || chain.size() < static_cast<std::size_t>(2 * i + 1))
    throw std::invalid_argument("chain too short");
  RootForm s = pullback_root(chain[0], AH, -i);
  for (int j = 1; j <= i; ++j)
    s = s + pullback_root(chain[2 * j - 1] + chain[2 * j], AH, -i - 1 + j);
  return s;
}

RootClassPartition root_classes(const std::vector<RootForm>& gamma,
                                const std::vector<RootForm>& lambda, const Matrix& AH) {
  return partition(gamma, gamma, lambda, AH);
}

RootClassPartition weight_classes(const std::vector<RootForm>& gamma,
                                  const std::vector<RootForm>& lambda, const Matrix& AH) {
  return partition(lambda, gamma, lambda, AH);
}

}  // namespace h3l

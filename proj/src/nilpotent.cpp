#include "torelli/nilpotent.hpp"

namespace torelli {

FreeWord free_reduce(const FreeWord& w) {
  FreeWord r(w.rank);
  r.ls.reserve(w.ls.size());
  for (int l : w.ls) {
    if (l == 0 || l > w.rank || l < -w.rank)
      throw std::invalid_argument("free_reduce: letter out of range");
    if (!r.ls.empty() && r.ls.back() == -l)
      r.ls.pop_back();
    else
      r.ls.push_back(l);
  }
  return r;
}

FreeWord word_inverse(const FreeWord& w) {
  FreeWord r(w.rank);
  r.ls.reserve(w.ls.size());
  for (auto it = w.ls.rbegin(); it != w.ls.rend(); ++it) r.ls.push_back(-*it);
  return r;
}

FreeWord word_concat(const FreeWord& u, const FreeWord& v) {
  if (u.rank != v.rank) throw std::invalid_argument("word_concat: rank");
  FreeWord r(u.rank);
  r.ls = u.ls;
  r.ls.insert(r.ls.end(), v.ls.begin(), v.ls.end());
  return free_reduce(r);
}

int eps_index(int rank, int i, int j) {
  // lexicographic rank of the pair (i, j), i < j
  return i * rank - i * (i + 1) / 2 + (j - i - 1);
}

Nil nil_identity(int rank) { return Nil(rank); }

Nil nil_generator(int rank, int index, int sign) {
  Nil n(rank);
  n.ab[index] = sign;
  return n;
}

namespace {

// cocycle of the collected normal form: k(u,v)_ij = -u_j * v_i
void add_cocycle(IntVec& cm, const IntVec& u, const IntVec& v, int rank) {
  for (int i = 0; i < rank; ++i) {
    if (v[i] == 0) continue;
    for (int j = i + 1; j < rank; ++j) {
      if (u[j] == 0) continue;
      cm[eps_index(rank, i, j)] -= u[j] * v[i];
    }
  }
}

}  // namespace

Nil nil_mul(const Nil& a, const Nil& b) {
  if (a.rank != b.rank) throw std::invalid_argument("nil_mul: rank mismatch");
  Nil n(a.rank);
  for (int i = 0; i < a.rank; ++i) n.ab[i] = a.ab[i] + b.ab[i];
  for (size_t i = 0; i < n.cm.size(); ++i) n.cm[i] = a.cm[i] + b.cm[i];
  add_cocycle(n.cm, a.ab, b.ab, a.rank);
  return n;
}

Nil nil_inv(const Nil& a) {
  Nil n(a.rank);
  for (int i = 0; i < a.rank; ++i) n.ab[i] = -a.ab[i];
  for (size_t i = 0; i < n.cm.size(); ++i) n.cm[i] = -a.cm[i];
  // -c + k(u,u), with k(u,u)_ij = -u_i u_j
  for (int i = 0; i < a.rank; ++i)
    for (int j = i + 1; j < a.rank; ++j)
      n.cm[eps_index(a.rank, i, j)] -= a.ab[i] * a.ab[j];
  return n;
}

Nil nil_pow(const Nil& a, const Int& k) {
  Nil n(a.rank);
  Int half = k * (k - 1) / 2;
  for (int i = 0; i < a.rank; ++i) n.ab[i] = k * a.ab[i];
  for (size_t i = 0; i < n.cm.size(); ++i) n.cm[i] = k * a.cm[i];
  for (int i = 0; i < a.rank; ++i)
    for (int j = i + 1; j < a.rank; ++j)
      n.cm[eps_index(a.rank, i, j)] -= half * (a.ab[i] * a.ab[j]);
  return n;
}

Nil nil_comm(const Nil& a, const Nil& b) {
  return nil_mul(nil_mul(nil_inv(a), nil_inv(b)), nil_mul(a, b));
}

Nil nil_project(const FreeWord& w) {
  Nil n(w.rank);
  for (int l : w.ls) {
    const int idx = (l > 0 ? l : -l) - 1;
    if (idx < 0 || idx >= w.rank)
      throw std::invalid_argument("nil_project: letter out of range");
    n = nil_mul(n, nil_generator(w.rank, idx, l > 0 ? 1 : -1));
  }
  return n;
}

NilEndo NilEndo::identity(int rank) {
  NilEndo e;
  e.rank = rank;
  for (int i = 0; i < rank; ++i) e.images.push_back(nil_generator(rank, i, 1));
  return e;
}

NilEndo NilEndo::from_words(const std::vector<FreeWord>& imgs) {
  NilEndo e;
  e.rank = static_cast<int>(imgs.size());
  for (const FreeWord& w : imgs) {
    if (w.rank != e.rank)
      throw std::invalid_argument("NilEndo::from_words: rank mismatch");
    e.images.push_back(nil_project(w));
  }
  return e;
}

Nil apply_endo(const NilEndo& e, const Nil& x) {
  if (e.rank != x.rank) throw std::invalid_argument("apply_endo: rank");
  Nil out(x.rank);
  for (int i = 0; i < x.rank; ++i)
    if (x.ab[i] != 0) out = nil_mul(out, nil_pow(e.images[i], x.ab[i]));
  for (int i = 0; i < x.rank; ++i)
    for (int j = i + 1; j < x.rank; ++j) {
      const Int& c = x.cm[eps_index(x.rank, i, j)];
      if (c != 0)
        out = nil_mul(out, nil_pow(nil_comm(e.images[i], e.images[j]), c));
    }
  return out;
}

Nil apply_endo(const NilEndo& e, const FreeWord& w) {
  if (e.rank != w.rank) throw std::invalid_argument("apply_endo: rank");
  Nil out(w.rank);
  for (int l : w.ls) {
    const int idx = (l > 0 ? l : -l) - 1;
    out = nil_mul(out, l > 0 ? e.images[idx] : nil_inv(e.images[idx]));
  }
  return out;
}

NilEndo compose(const NilEndo& f, const NilEndo& g) {
  if (f.rank != g.rank) throw std::invalid_argument("compose: rank mismatch");
  NilEndo e;
  e.rank = f.rank;
  for (const Nil& img : g.images) e.images.push_back(apply_endo(f, img));
  return e;
}

}  // namespace torelli

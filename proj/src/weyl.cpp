#include "lweyl/weyl.hpp"

#include <deque>

namespace lweyl {

std::vector<long long> WeylGroup::matmul(const std::vector<long long>& a,
                                         const std::vector<long long>& b) const {
    std::vector<long long> r(n_ * n_, 0);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            if (a[i * n_ + k] == 0) continue;
            for (int j = 0; j < n_; ++j) r[i * n_ + j] += a[i * n_ + k] * b[k * n_ + j];
        }
    return r;
}

WeylGroup::WeylGroup(const RootDatum& rd) : rd_(&rd), n_(rd.rank()) {
    const auto& A = rd.cartan();
    std::vector<long long> id(n_ * n_, 0);
    for (int i = 0; i < n_; ++i) id[i * n_ + i] = 1;

    // generator matrices
    std::vector<Elem> gens(n_);
    for (int i = 0; i < n_; ++i) {
        auto& g = gens[i];
        g.mfw = g.mcor = g.mrt = id;
        // weights: lambda -> lambda - lambda_i * alpha_i; fund(alpha_i)_r = A[r][i]
        for (int r = 0; r < n_; ++r) g.mfw[r * n_ + i] -= A[r][i];
        // coroots: g -> g - (sum_j A[j][i] g_j) e_i
        for (int j = 0; j < n_; ++j) g.mcor[i * n_ + j] -= A[j][i];
        // roots: c -> c - (sum_j A[i][j] c_j) e_i
        for (int j = 0; j < n_; ++j) g.mrt[i * n_ + j] -= A[i][j];
        g.word = {i};
    }

    els_.push_back(Elem{id, id, id, {}, 0});
    index_[id] = 0;
    std::deque<int> bfs{0};
    while (!bfs.empty()) {
        int cur = bfs.front();
        bfs.pop_front();
        for (int i = 0; i < n_; ++i) {
            Elem nx;
            // right multiplication: (cur * s_i), maps apply s_i first
            nx.mfw = matmul(els_[cur].mfw, gens[i].mfw);
            if (index_.count(nx.mfw)) continue;
            nx.mcor = matmul(els_[cur].mcor, gens[i].mcor);
            nx.mrt = matmul(els_[cur].mrt, gens[i].mrt);
            nx.word = els_[cur].word;
            nx.word.push_back(i);
            int idx = (int)els_.size();
            index_[nx.mfw] = idx;
            els_.push_back(std::move(nx));
            bfs.push_back(idx);
            if (els_.size() > 200000) throw ConfigError("Weyl group too large");
        }
    }
    simple_.resize(n_);
    for (int i = 0; i < n_; ++i) simple_[i] = index_.at(gens[i].mfw);
    // inverses
    for (size_t a = 0; a < els_.size(); ++a) {
        int inv = 0;
        for (auto it = els_[a].word.rbegin(); it != els_[a].word.rend(); ++it)
            inv = mult(inv, simple_[*it]);
        // word reversed gives inverse since generators are involutions
        els_[a].inv = inv;
    }
}

int WeylGroup::mult(int a, int b) const {
    auto m = matmul(els_[a].mfw, els_[b].mfw);
    return index_.at(m);
}

Weight WeylGroup::act_weight(int a, const Weight& w) const {
    Weight r{Vec(n_, 0)};
    const auto& m = els_[a].mfw;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.fw[i] += m[i * n_ + j] * w.fw[j];
    return r;
}

Coroot WeylGroup::act_coroot(int a, const Coroot& c) const {
    Coroot r{Vec(n_, 0)};
    const auto& m = els_[a].mcor;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.cc[i] += m[i * n_ + j] * c.cc[j];
    return r;
}

Root WeylGroup::act_root(int a, const Root& rt) const {
    Root r{Vec(n_, 0)};
    const auto& m = els_[a].mrt;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.rc[i] += m[i * n_ + j] * rt.rc[j];
    return r;
}

int WeylGroup::reflection(const Root& beta) const {
    Root b = beta;
    {
        bool neg = false;
        for (auto x : b.rc)
            if (x < 0) neg = true;
        if (neg) b = Root{vec_neg(b.rc)};
    }
    const PosRoot* pr = rd_->find_pos_root(b);
    if (!pr) throw MathError("reflection: not a root: " + vec_str(beta.rc));
    auto it = refl_cache_.find(b);
    if (it != refl_cache_.end()) return it->second;
    // s_beta = w s_i w^{-1} where w(alpha_i) = beta
    for (size_t k = 0; k < els_.size(); ++k) {
        for (int i = 0; i < n_; ++i) {
            if (act_root((int)k, rd_->simple_root(i)) == b) {
                int w = (int)k;
                int r = mult(mult(w, simple_[i]), inverse(w));
                refl_cache_[b] = r;
                return r;
            }
        }
    }
    throw MathError("reflection: root not in W-orbit of simples");
}

}  // namespace lweyl

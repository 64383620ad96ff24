#pragma once

#include <vector>

#include "forklab/enumerate.hpp"
#include "forklab/fork.hpp"

namespace forklab {

struct TineMetrics {
  int gap;
  int reserve;
  int reach;
};

// gap = height - length, reserve = adversarial slots after l(t). Closed forks only.
TineMetrics tine_metrics(const Fork& F, VertexId t);

// Maximum reach over all tines of a closed fork.
int fork_rho(const Fork& F);
// Maximum over tine pairs sharing no edge into a label above x_len of the
// smaller reach. A tine may pair with itself when it ends inside x.
int fork_mu(const Fork& F, int x_len);

struct MarginState {
  int rho = 0;
  int mu = 0;
};

// One symbol of the joint recurrence. Guards read rho before b is consumed.
MarginState margin_step(MarginState st, Symbol b);
int rho_recursive(const CharString& w);
MarginState margin_fold(const CharString& x, const CharString& y);
int mu_recursive(const CharString& x, const CharString& y);

int rho_bruteforce(const CharString& w, const EnumerationCaps& caps = {});
int mu_bruteforce(const CharString& x, const CharString& y, const EnumerationCaps& caps = {});
// mu_x for every split |x| = 0..|w| from one enumeration pass.
std::vector<int> mu_bruteforce_all(const CharString& w, const EnumerationCaps& caps = {});

// Law of rho(x) for |x| = m: a walk reflected at 0 that rises with p_A.
std::vector<double> rho_distribution(std::size_t m, double eps, double p_h);

}  // namespace forklab

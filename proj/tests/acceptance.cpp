#include <branchkit/verify.hpp>

#include <chrono>
#include <cstdio>
#include <exception>

int main()
{
  using namespace branchkit;
  struct Criterion
  {
    const char * suite;
    const char * description;
  };
  const Criterion criteria[] = {
      {"dimensions", "pattern count, Weyl dimension, and realized dimension agree"},
      {"theorem-a", "gl essential sets match the closed inequality description; pi-to-xi triangular"},
      {"theorem-b", "sp theta family is a basis; eta-to-xi triangular; theta-to-xi counterexample confirmed"},
      {"zeta", "explicit pattern action satisfies all relations, character, and multiplicity counts"},
      {"gamma-small", "fundamental-weight branching sets match the closed-form lists verbatim"},
      {"natural-count", "inequality solution counts equal the multiplicity products"},
      {"gt-gamma", "closed-form branching sets match brute force; fundamental sets multiply"},
      {"projectors", "projector identities and lowering-string interpolation hold everywhere"},
      {"products", "product property and factorization of essential sets hold as set identities"},
      {"littelmann-fnn", "string family triangular; closed-formula action matches the realization"},
  };

  bool all_pass = true;
  int idx = 0;
  for (const Criterion & cr : criteria) {
    ++idx;
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult res;
    try {
      res = run_suite(cr.suite);
    } catch (const std::exception & e) {
      res.name = cr.suite;
      res.pass = false;
      res.detail = std::string("exception: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    all_pass = all_pass && res.pass;
    std::printf("[%s] %2d %-15s %s (%ld checks, %.1fs)%s%s\n", res.pass ? "PASS" : "FAIL", idx,
                cr.suite, cr.description, res.checks, secs, res.detail.empty() ? "" : " -- ",
                res.detail.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}

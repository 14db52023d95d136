#pragma once

#include <string>
#include <vector>

#include "charpreg/hilbert.hpp"
#include "charpreg/resolution.hpp"

namespace charpreg {

struct RegScanRow {
  unsigned e = 0;
  unsigned long long q = 1;
  int gen_index = 0;  // 1-based position in the generator list
  int reg = 0;        // of R/(I^[q] + g_i)
  double ratio = 0.0; // reg / q
};

struct ColonScanRow {
  unsigned e = 0;
  unsigned long long q = 1;
  int max_gen_degree = 0;   // top minimal generator degree of (I^[q] : I)
  int colon_regularity = 0; // of the colon ideal
  double deg_ratio = 0.0;   // max_gen_degree / q
  bool degree_bounded = false;  // max_gen_degree <= colon_regularity
  bool certified = false;       // full membership audit ran (q <= 4)
};

struct ScanReport {
  std::vector<RegScanRow> rows;
  std::vector<ColonScanRow> colon_rows;
  std::vector<int> singular_dims;  // one per generator, -1 = smooth locus
  double max_reg_ratio = 0.0;
  double max_deg_ratio = 0.0;
  bool homogenized = false;
  std::string homogenizing_variable;
  std::string verdict;
};

// Dimension of the locus where V(g) is singular inside V(I): the ideal
// generated by I, g, and all partials of g, measured through the Hilbert
// series of its lead terms in grevlex. -1 for an empty locus.
int singular_locus_dimension(const Ideal& I, const Polynomial& g);

// Sweeps e = 0..max_e over q = p^e: regularity of R/(I^[q] + g_i) per
// generator, and degrees/regularity of (I^[q] : I) with a membership audit
// at small q. Non-homogeneous input is homogenized first.
ScanReport run_scan(const Ideal& I, unsigned max_e, const GBOptions& opts = {});

}  // namespace charpreg

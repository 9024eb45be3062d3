#pragma once

#include <complex>
#include <string>
#include <vector>

namespace mutkit {

enum class SectionSide { upper, lower };

struct ElementarySection {
    int n = 2;
    double eps = 0.5;
    SectionSide side = SectionSide::upper;
    int k = 1;  // distinguished coordinate, lower side only
    std::vector<double> theta;  // n-1 phase angles

    void validate() const;
};

struct ReebChord {
    int multiplicity = 1;
    int start_sign = +1;  // which Legendrian torus carries the start point
    std::vector<double> start_angles;
};

struct GridSpec {
    std::complex<double> corner;  // lower-left
    double width = 1.0;
    double height = 1.0;
    int nx = 50;
    int ny = 50;
    double h = 1e-5;  // finite-difference step
};

struct SectionReport {
    double projection_residual = 0;  // max |pi_m(s(z)) - z|
    double modulus_spread = 0;       // max over boundary of max_j|z_j| - min_j|z_j|
    bool ok = false;
};

// n-th root with branch cut along the negative imaginary axis.
std::complex<double> root_n(std::complex<double> z, int n);

std::vector<std::complex<double>> evaluate_section(const ElementarySection& s,
                                                   std::complex<double> z);

double cr_residual(const ElementarySection& s, const GridSpec& grid);

SectionReport verify_section_properties(const ElementarySection& s, int samples = 1000,
                                        unsigned seed = 7);

int elementary_count(SectionSide side, bool mutated, int n);

int reeb_endpoint_sign(int start_sign, int l);

struct IndexWitness {
    int maslov;
    int weighted_infinity;
    int index;
};
IndexWitness elementary_index_witness(int n);

}  // namespace mutkit

#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace disclap {

/// Basis tag for one trigonometric term.
enum class Harmonic { Cosine, Sine };

/// One term coeff * cos(k*theta) or coeff * sin(k*theta), integer k >= 0.
struct HarmonicTerm {
  Harmonic kind = Harmonic::Cosine;
  int k = 0;
  double coeff = 0.0;
};

/// Dirichlet boundary data f(theta) on the circle.
///
/// Either a finite trigonometric sum (closed form) or M uniform samples
/// taken at theta_j = 2*pi*j/M, j = 0..M-1. Immutable after construction;
/// all operations on it are pure.
class BoundarySpec {
 public:
  /// Finite sum of harmonic terms. Every k must be a nonnegative integer
  /// and every coefficient finite.
  static BoundarySpec closed_form(std::vector<HarmonicTerm> terms);

  /// Constant boundary data f = c.
  static BoundarySpec constant(double c);

  /// M uniform samples; M must be even and at least 4.
  static BoundarySpec sampled(std::vector<double> values);

  /// Parse the expression grammar
  ///   expr := term (('+' | '-') term)*
  ///   term := NUM | NUM '*' trig | trig
  ///   trig := ('sin' | 'cos') '(' [INT '*'] 't' ')'
  /// e.g. "sin(2*t)", "100*sin(2*t)", "cos(t) + 3*sin(3*t)", "5".
  static BoundarySpec parse(std::string_view text);

  /// Load a Sampled spec from a single-column CSV file (one value per line,
  /// blank lines and '#' comments skipped).
  static BoundarySpec load_csv(const std::string& path);

  bool is_closed_form() const;

  /// Closed-form terms; only valid when is_closed_form().
  const std::vector<HarmonicTerm>& terms() const;

  /// Uniform samples; only valid when !is_closed_form().
  const std::vector<double>& samples() const;

 private:
  struct ClosedForm {
    std::vector<HarmonicTerm> terms;
  };
  struct Sampled {
    std::vector<double> values;
  };

  explicit BoundarySpec(ClosedForm cf) : data_(std::move(cf)) {}
  explicit BoundarySpec(Sampled s) : data_(std::move(s)) {}

  std::variant<ClosedForm, Sampled> data_;
};

/// Truncated Fourier expansion f ~ a0 + sum_{n=1}^{N} a_n cos(n t) + b_n sin(n t).
/// The constant term is the mean of f: no 1/2 convention anywhere.
struct FourierCoefficients {
  double a0 = 0.0;
  std::vector<double> a;  // a_1 .. a_N
  std::vector<double> b;  // b_1 .. b_N

  int n_max() const { return static_cast<int>(a.size()); }

  /// Pointwise value of the truncated series at theta.
  double evaluate(double theta) const;
};

/// f(theta). Exact for closed forms; periodic linear interpolation between
/// samples otherwise. theta is reduced mod 2*pi internally.
double eval_boundary(const BoundarySpec& spec, double theta);

/// Fourier coefficients up to order n_max (>= 1).
///
/// Closed forms are matched term by term (exact). Sampled data uses the
/// trapezoid rule on the uniform grid, which is spectrally accurate for
/// periodic integrands; n_max must not exceed the Nyquist limit M/2 - 1.
FourierCoefficients fourier_coefficients(const BoundarySpec& spec, int n_max);

}  // namespace disclap

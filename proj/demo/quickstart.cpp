// Derivative totals of a few small functions.

#include <iostream>

#include <bfderiv/bfderiv.hpp>

int main()
{
  using namespace bfderiv;

  const auto f = truth_table_from_bits( "00010111" ); // majority of three
  const auto p = scalar_profile( f );
  std::cout << "majority: weight " << p.weight << ", s1 " << p.s1 << ", s2 " << p.s2 << "\n";

  const auto cube = catalog::gold( 5, 1 );
  const auto v = vectorial_profile( cube );
  std::cout << "x^3 over GF(32): delta " << differential_uniformity( cube ) << ", vs1 " << v.vs1
            << ", vs2 " << v.vs2 << ", bound " << apn_s2_bound( 5 ) << "\n";

  const auto H = catalog::dillon_permutation();
  std::cout << "n = 6 APN permutation: " << ( check_apn_by_s2( vectorial_profile( H ) ).verdict ? "apn-s2 holds" : "apn-s2 fails" ) << "\n";
  return 0;
}

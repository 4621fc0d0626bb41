#pragma once

#include <string_view>

namespace polyft {

// Built-in test fixture: two overlapping unit spheres centered 1.2 apart
// on the x axis, merged into one watertight surface of 83 points and 160
// triangles (the seam ring at x = 0 has radius 0.8). Vertex 82 is
// unreferenced and must survive IO round trips.
inline std::string_view two_spheres_surfacemesh() {
  return R"SM(surfacemesh
83
         0       -0.8          0 
         0  -0.646633  -0.471026 
         0  -0.244492  -0.761724 
         0    0.24951  -0.760095 
         0   0.650833  -0.465206 
         0   0.799973 0.00660409 
         0   0.644364   0.474125 
         0   0.242392   0.762395 
         0  -0.250252   0.759851 
         0  -0.648316   0.468707 
 -0.356907  -0.922165  -0.300863 
 -0.347131  -0.567188  -0.783808 
 -0.357573  0.0050912  -0.970156 
 -0.369647   0.575911  -0.784388 
  -0.37288   0.931353  -0.284602 
  -0.37676   0.917429   0.329375 
 -0.369284   0.561424   0.794716 
 -0.387142 -0.0140678   0.976982 
 -0.412157  -0.582938   0.790505 
 -0.385578  -0.929431   0.300301 
 -0.760251  -0.306731  -0.938209 
 -0.760576  -0.795816   -0.58386 
 -0.813869   0.298987  -0.929982 
 -0.813426    0.79047  -0.574114 
 -0.821753   0.973827  0.0498692 
 -0.835588   0.746598   0.622165 
 -0.761439   0.283083   0.945411 
 -0.903893  -0.261241   0.916189 
 -0.883309  -0.779017   0.559346 
 -0.803356  -0.978812 -0.0239454 
  -1.19796 -0.0347093  -0.800775 
  -1.18082  -0.758163  -0.296374 
  -1.23593   0.456043  -0.622585 
  -1.20125   0.760906  -0.243974 
    -1.276   0.676061   0.293208 
  -1.22172   0.230192   0.748648 
  -1.10981  -0.519442  -0.685767 
   -1.1967  -0.780973   0.184463 
  -1.47888  0.0876796  -0.468915 
  -1.38991  -0.362765   0.494419 
  -1.50034   0.409012  -0.148656 
  -1.52632   0.184822   0.328273 
  -1.43381  -0.350022  -0.426898 
  -1.45293  -0.521864 -0.0129389 
  -1.59324  -0.111427 -0.0324898 
  0.353411  -0.922424    -0.2972 
   0.35295  -0.576474  -0.778873 
  0.359646 -0.00259245  -0.970682 
  0.365788   0.577679  -0.781941 
  0.354885   0.929085  -0.276983 
  0.350692   0.915547   0.315627 
  0.356403   0.564491   0.788676 
  0.360185 -0.0185137   0.970642 
  0.354104  -0.571601   0.782821 
  0.355115   -0.92195   0.300067 
  0.778156  -0.806435  -0.563846 
  0.777153  -0.329327  -0.927448 
  0.807472   0.308424  -0.928348 
  0.815371   0.808817  -0.547202 
  0.775977   0.983647  0.0383495 
  0.772101   0.779013   0.602926 
  0.781753   0.290957   0.939314 
  0.789647  -0.311115   0.931258 
  0.779065  -0.781899   0.597134 
  0.783485  -0.982953 -0.0116784 
   1.13571  -0.519537  -0.665658 
   1.21105 -0.0477391  -0.790149 
   1.21305   0.486838   -0.62222 
   1.19736   0.784525  -0.166363 
   1.13036   0.790032   0.307512 
   1.19753   0.460595   0.656358 
   1.15168 -0.0067317   0.834029 
   1.23508  -0.439877    0.63497 
    1.2143  -0.753463   -0.23437 
   1.18111  -0.771965   0.257649 
   1.47664   -0.31298  -0.365446 
    1.4629   0.448967  -0.232032 
   1.44925   0.479567   0.220866 
   1.48355  0.0124405   0.468166 
   1.47929   0.115775  -0.461995 
    1.4961  -0.418884   0.146737 
    1.5993  0.0340127 -0.0153453 
 0.0209034 -0.00574919 -0.0184872 
160
       2       1      11
       3       2      12
       4       3      13
       5       4      14
       6       5      15
       7       6      16
       8       7      17
       9       8      18
      10       9      19
       1      10      20
       3      12      13
       4      13      14
       5      14      15
       6      15      16
       7      16      17
       8      17      18
       9      18      19
      10      19      20
       1      20      11
       2      11      12
      13      12      21
      12      11      22
      14      13      23
      15      14      24
      16      15      25
      17      16      26
      18      17      27
      19      18      28
      20      19      29
      11      20      30
      30      20      29
      29      19      28
      28      18      27
      27      17      26
      26      16      25
      25      15      24
      24      14      23
      23      13      21
      22      11      30
      12      22      21
      23      21      31
      22      30      32
      24      23      33
      23      31      33
      25      24      34
      24      33      34
      26      25      35
      25      34      35
      27      26      36
      26      35      36
      28      27      36
      29      28      40
      21      22      37
      31      21      37
      22      32      37
      30      29      38
      32      30      38
      29      40      38
      28      36      40
      33      31      39
      76      82      81
      34      33      41
      33      39      41
      35      34      41
      36      35      42
      40      36      42
      35      41      42
      79      81      82
      39      31      43
      31      37      43
      37      32      43
      32      38      44
      44      38      40
      43      32      44
      41      39      45
      42      41      45
      39      43      45
      43      44      45
      40      42      45
      44      40      45
       1       2      46
       2       3      47
       3       4      48
       4       5      49
       5       6      50
       6       7      51
       7       8      52
       8       9      53
       9      10      54
      10       1      55
       2      47      46
       3      48      47
       4      49      48
       5      50      49
       6      51      50
       7      52      51
       8      53      52
       9      54      53
      10      55      54
       1      46      55
      46      47      56
      47      48      57
      48      49      58
      49      50      59
      50      51      60
      51      52      61
      52      53      62
      53      54      63
      54      55      64
      55      46      65
      65      46      56
      64      55      65
      63      54      64
      62      53      63
      61      52      62
      60      51      61
      59      50      60
      58      49      59
      57      48      58
      47      57      56
      56      57      66
      57      58      67
      58      59      68
      59      60      69
      60      61      70
      61      62      71
      62      63      72
      63      64      73
      65      56      74
      56      66      74
      64      65      75
      73      64      75
      65      74      75
      72      63      73
      71      62      72
      70      61      71
      69      60      70
      68      59      69
      67      58      68
      66      57      67
      74      66      76
      66      67      76
      68      69      77
      70      71      78
      72      73      79
      76      67      80
      80      67      68
      75      81      73
      78      71      79
      68      77      80
      77      69      78
      69      70      78
      71      72      79
      75      74      81
      79      73      81
      74      76      81
      77      78      82
      80      77      82
      78      79      82
      76      80      82
)SM";
}

}  // namespace polyft

// Generated by tools/certgen; do not edit. Byte-identical copies of
// the JSON documents under data/certificates/.
#include "meanineq/certify.hpp"

namespace meanineq::certify {

const std::vector<std::string>& builtin_certificate_json() {
    static const std::vector<std::string> data = {
        R"certjson({
  "statement_id": "thm21.p01",
  "scale": "28",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(7*t^4+14*t^3+14*t^2+14*t+7)*R1",
      "t": "(8*t^6-26*t^5+116*t^4-84*t^3+116*t^2-26*t+8)",
      "witness": [
        {
          "factors": [
            {
              "expr": "7*t^4+14*t^3+14*t^2+14*t+7"
            },
            {
              "expr": "R1"
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 2
    },
    {
      "op": "sturm_no_positive_roots"
    },
    {
      "op": "positive_at_one"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p02",
  "scale": "12",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(4*t+4)*R2",
      "t": "(10*t)+(3)*R1",
      "witness": [
        {
          "factors": [
            {
              "expr": "4*t+4"
            },
            {
              "expr": "R2"
            }
          ]
        }
      ]
    },
    {
      "op": "split_square",
      "s": "(7*t^4+32*t^3-18*t^2+32*t+7)",
      "t": "(30*t)*R1",
      "witness": [
        {
          "factors": [
            {
              "expr": "7*t^4+23*t^3+23*t+7"
            }
          ]
        },
        {
          "factors": [
            {
              "expr": "9*t"
            },
            {
              "expr": "t-1",
              "pow": 2
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 4
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p03",
  "scale": "6",
  "note": "Displayed factorization shows (sqrt x - 1)^2; the exact power is 4.",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(t^3+t^2+t+1)*R2",
      "t": "(t^4+3*t^3+3*t+1)",
      "witness": [
        {
          "factors": [
            {
              "expr": "t^3+t^2+t+1"
            },
            {
              "expr": "R2"
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 4
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p04",
  "scale": "10",
  "note": "Displayed bracket carries a stray factor 5 on the R2 term; the v_4 cross term fixes it to 1.",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(22*t^6+40*t^5+102*t^4-8*t^3+102*t^2+40*t+22)",
      "t": "(10*t^4+20*t^3+20*t^2+20*t+10)*R1+(5*t^5+15*t^4+20*t^3+20*t^2+15*t+5)*R2",
      "witness": [
        {
          "factors": [
            {
              "expr": "22*t^6+40*t^5+98*t^4+98*t^2+40*t+22"
            }
          ]
        },
        {
          "factors": [
            {
              "expr": "4*t^2"
            },
            {
              "expr": "t-1",
              "pow": 2
            }
          ]
        }
      ]
    },
    {
      "op": "split_square",
      "s": "(117*t^12+330*t^11+1794*t^10+1754*t^9+4051*t^8+444*t^7+8620*t^6+444*t^5+4051*t^4+1754*t^3+1794*t^2+330*t+117)",
      "t": "(50*t^9+250*t^8+600*t^7+1000*t^6+1300*t^5+1300*t^4+1000*t^3+600*t^2+250*t+50)*R1*R2",
      "witness": [
        {
          "factors": [
            {
              "expr": "117*t^12+330*t^11+1794*t^10+1754*t^9+4051*t^8+444*t^7+8620*t^6+444*t^5+4051*t^4+1754*t^3+1794*t^2+330*t+117"
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 4
    },
    {
      "op": "sturm_no_positive_roots"
    },
    {
      "op": "positive_at_one"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p05",
  "scale": "6",
  "note": "Conclusion line names h_17 where h_5 is meant.",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(13*t^6+26*t^5+55*t^4+4*t^3+55*t^2+26*t+13)",
      "t": "(6*t^4+12*t^3+12*t^2+12*t+6)*R1+(3*t^5+9*t^4+12*t^3+12*t^2+9*t+3)*R2",
      "witness": [
        {
          "factors": [
            {
              "expr": "13*t^6+26*t^5+55*t^4+4*t^3+55*t^2+26*t+13"
            }
          ]
        }
      ]
    },
    {
      "op": "split_square",
      "s": "(79*t^12+280*t^11+1206*t^10+1416*t^9+2449*t^8+1312*t^7+4948*t^6+1312*t^5+2449*t^4+1416*t^3+1206*t^2+280*t+79)",
      "t": "(36*t^9+180*t^8+432*t^7+720*t^6+936*t^5+936*t^4+720*t^3+432*t^2+180*t+36)*R1*R2",
      "witness": [
        {
          "factors": [
            {
              "expr": "79*t^12+280*t^11+1206*t^10+1416*t^9+2449*t^8+1312*t^7+4948*t^6+1312*t^5+2449*t^4+1416*t^3+1206*t^2+280*t+79"
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 4
    },
    {
      "op": "sturm_no_positive_roots"
    },
    {
      "op": "positive_at_one"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p06",
  "scale": "30",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(26*t^6+40*t^5+146*t^4+56*t^3+146*t^2+40*t+26)",
      "t": "(15*t^5+45*t^4+60*t^3+60*t^2+45*t+15)*R2",
      "witness": [
        {
          "factors": [
            {
              "expr": "26*t^6+40*t^5+146*t^4+56*t^3+146*t^2+40*t+26"
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 4
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p07",
  "scale": "6",
  "note": "Profile line reuses the name g_6 where g_7 is meant.",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(5*t^4+10*t^3+18*t^2+10*t+5)",
      "t": "(3*t^3+9*t^2+9*t+3)*R2",
      "witness": [
        {
          "factors": [
            {
              "expr": "5*t^4+10*t^3+18*t^2+10*t+5"
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 4
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p08",
  "scale": "3",
  "note": "Displayed u_8 lists the polynomial side first; the radical side is the larger one.",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(3*t^4+6*t^3+6*t^2+6*t+3)*R1",
      "t": "(4*t^6+8*t^5+12*t^4+12*t^2+8*t+4)",
      "witness": [
        {
          "factors": [
            {
              "expr": "3*t^4+6*t^3+6*t^2+6*t+3"
            },
            {
              "expr": "R1"
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 2
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p09",
  "scale": "15",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(15*t^4+30*t^3+30*t^2+30*t+15)*R1",
      "t": "(21*t^6+28*t^5+99*t^4-56*t^3+99*t^2+28*t+21)",
      "witness": [
        {
          "factors": [
            {
              "expr": "15*t^4+30*t^3+30*t^2+30*t+15"
            },
            {
              "expr": "R1"
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 2
    },
    {
      "op": "sturm_no_positive_roots"
    },
    {
      "op": "positive_at_one"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p10",
  "scale": "9",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(5*t^4+10*t^3+10*t^2+10*t+5)*R1",
      "t": "(7*t^6+10*t^5+31*t^4-16*t^3+31*t^2+10*t+7)",
      "witness": [
        {
          "factors": [
            {
              "expr": "5*t^4+10*t^3+10*t^2+10*t+5"
            },
            {
              "expr": "R1"
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 2
    },
    {
      "op": "sturm_no_positive_roots"
    },
    {
      "op": "positive_at_one"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p11",
  "scale": "3",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "deflate_zero",
      "k": 2
    },
    {
      "op": "unit_root_factor",
      "k": 2
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p12",
  "scale": "20",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "unit_root_factor",
      "k": 4
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p13",
  "scale": "10",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(t^2+2*t+1)*R1+(2*t^3+6*t^2+6*t+2)*R2",
      "t": "(4*t^4+9*t^3+14*t^2+9*t+4)",
      "witness": [
        {
          "factors": [
            {
              "expr": "t^2+2*t+1"
            },
            {
              "expr": "R1"
            }
          ]
        },
        {
          "factors": [
            {
              "expr": "2*t^3+6*t^2+6*t+2"
            },
            {
              "expr": "R2"
            }
          ]
        }
      ]
    },
    {
      "op": "split_square",
      "s": "(4*t^5+20*t^4+40*t^3+40*t^2+20*t+4)*R1*R2",
      "t": "(6*t^8+16*t^7+53*t^6+108*t^5+146*t^4+108*t^3+53*t^2+16*t+6)",
      "witness": [
        {
          "factors": [
            {
              "expr": "4*t^5+20*t^4+40*t^3+40*t^2+20*t+4"
            },
            {
              "expr": "R1"
            },
            {
              "expr": "R2"
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 2
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p14",
  "scale": "20",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(5*t^2+10*t+5)*R1",
      "t": "(6*t^4+6*t^3+16*t^2+6*t+6)",
      "witness": [
        {
          "factors": [
            {
              "expr": "5*t^2+10*t+5"
            },
            {
              "expr": "R1"
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 2
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p15",
  "scale": "30",
  "note": "Combination line prints 27N for 27N3.",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(10*t^4+20*t^3+20*t^2+20*t+10)*R1",
      "t": "(12*t^6+27*t^5+34*t^4+14*t^3+34*t^2+27*t+12)",
      "witness": [
        {
          "factors": [
            {
              "expr": "10*t^4+20*t^3+20*t^2+20*t+10"
            },
            {
              "expr": "R1"
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 2
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p16",
  "scale": "40",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "unit_root_factor",
      "k": 4
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p17",
  "scale": "8",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "unit_root_factor",
      "k": 2
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p18",
  "scale": "70",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(28*t^6+28*t^5+28*t^4+56*t^3+28*t^2+28*t+28)*R1",
      "t": "(25*t^8+115*t^7-51*t^6-69*t^5+408*t^4-69*t^3-51*t^2+115*t+25)",
      "witness": [
        {
          "factors": [
            {
              "expr": "28*t^6+28*t^5+28*t^4+56*t^3+28*t^2+28*t+28"
            },
            {
              "expr": "R1"
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 2
    },
    {
      "op": "sturm_no_positive_roots"
    },
    {
      "op": "positive_at_one"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p19",
  "scale": "42",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(21*t^7+42*t^6+42*t^5+63*t^4+63*t^3+42*t^2+42*t+21)*R2",
      "t": "(16*t^8+166*t^7-204*t^6+410*t^5-104*t^4+410*t^3-204*t^2+166*t+16)",
      "witness": [
        {
          "factors": [
            {
              "expr": "21*t^7+42*t^6+42*t^5+63*t^4+63*t^3+42*t^2+42*t+21"
            },
            {
              "expr": "R2"
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 2
    },
    {
      "op": "sturm_no_positive_roots"
    },
    {
      "op": "positive_at_one"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p20",
  "scale": "6",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(2*t^4+2*t^3+8*t^2+2*t+2)",
      "t": "(t^3+3*t^2+3*t+1)*R2",
      "witness": [
        {
          "factors": [
            {
              "expr": "2*t^4+2*t^3+8*t^2+2*t+2"
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 4
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p21",
  "scale": "21",
  "note": "Heading prints 6N2 where 6N3 is meant.",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(10*t^6+36*t^5+18*t^4+96*t^3+18*t^2+36*t+10)",
      "t": "(7*t^5+21*t^4+28*t^3+28*t^2+21*t+7)*R2",
      "witness": [
        {
          "factors": [
            {
              "expr": "10*t^6+36*t^5+18*t^4+96*t^3+18*t^2+36*t+10"
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 4
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p22",
  "scale": "65",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(60*t^14+203*t^12-250*t^11+190*t^10+390*t^9+203*t^8-760*t^7+203*t^6+390*t^5+190*t^4-250*t^3+203*t^2+60)",
      "t": "(26*t^12+52*t^11+26*t^10+26*t^8+52*t^7+52*t^6+52*t^5+26*t^4+26*t^2+52*t+26)*R1",
      "witness": [
        {
          "factors": [
            {
              "expr": "60*t^14+78*t^12+65*t^10+10*t^9+203*t^8+203*t^6+10*t^5+65*t^4+78*t^2+60"
            }
          ]
        },
        {
          "factors": [
            {
              "expr": "125*t^10"
            },
            {
              "expr": "t-1",
              "pow": 2
            }
          ]
        },
        {
          "factors": [
            {
              "expr": "380*t^5"
            },
            {
              "expr": "t^2-1",
              "pow": 2
            }
          ]
        },
        {
          "factors": [
            {
              "expr": "125*t^2"
            },
            {
              "expr": "t-1",
              "pow": 2
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 2
    },
    {
      "op": "split_square",
      "s": "(2248*t^26+12176*t^24+26137*t^22+93811*t^20+141228*t^19+112187*t^18+249211*t^16+505084*t^15+137574*t^14+137574*t^12+505084*t^11+249211*t^10+112187*t^8+141228*t^7+93811*t^6+26137*t^4+12176*t^2+2248)",
      "t": "(912*t^25+10144*t^23+8506*t^21+158954*t^17+471720*t^13+158954*t^9+8506*t^5+10144*t^3+912*t)",
      "witness": [
        {
          "factors": [
            {
              "expr": "2248*t^26+12176*t^24+26137*t^22+93811*t^20+141228*t^19+112187*t^18+249211*t^16+505084*t^15+137574*t^14+137574*t^12+505084*t^11+249211*t^10+112187*t^8+141228*t^7+93811*t^6+26137*t^4+12176*t^2+2248"
            }
          ]
        }
      ]
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p23",
  "scale": "20",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(9*t^2+18*t+9)*R1",
      "t": "(50*t^3-28*t^2+50*t)",
      "witness": [
        {
          "factors": [
            {
              "expr": "9*t^2+18*t+9"
            },
            {
              "expr": "R1"
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 2
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p24",
  "scale": "91",
  "note": "Remark item 24 prints this relation with the direction reversed.",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "unit_root_factor",
      "k": 2
    },
    {
      "op": "sturm_no_positive_roots"
    },
    {
      "op": "positive_at_one"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p25",
  "scale": "28",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(35*t^2+35)*R1",
      "t": "(32*t^4+54*t^3-32*t^2+54*t+32)",
      "witness": [
        {
          "factors": [
            {
              "expr": "35*t^2+35"
            },
            {
              "expr": "R1"
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 2
    },
    {
      "op": "sturm_no_positive_roots"
    },
    {
      "op": "positive_at_one"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p26",
  "scale": "7",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(7*t^2+7)*R1",
      "t": "(8*t^4-4*t^3+20*t^2-4*t+8)",
      "witness": [
        {
          "factors": [
            {
              "expr": "7*t^2+7"
            },
            {
              "expr": "R1"
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 2
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p27",
  "scale": "14",
  "note": "Heading prints (2P4+5P6)/7; the proven combination uses P5.",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "unit_root_factor",
      "k": 2
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p28",
  "scale": "18",
  "note": "Heading prints the reverse direction; the proof establishes this one.",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(7*t^4+18*t^2+7)",
      "t": "(4*t^3+4*t^2+4*t+4)*R2",
      "witness": [
        {
          "factors": [
            {
              "expr": "7*t^4+18*t^2+7"
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 4
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p29",
  "scale": "7",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(17*t^10-17*t^9+69*t^8-96*t^7+86*t^6-6*t^5+86*t^4-96*t^3+69*t^2-17*t+17)",
      "t": "(7*t^8+7*t^7+7*t^5+14*t^4+7*t^3+7*t+7)*R1",
      "witness": [
        {
          "factors": [
            {
              "expr": "8*t^10+t^9+12*t^8+35*t^6+35*t^4+12*t^2+t+8"
            }
          ]
        },
        {
          "factors": [
            {
              "expr": "9*t^8+48*t^6+3*t^4+48*t^2+9"
            },
            {
              "expr": "t-1",
              "pow": 2
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 4
    },
    {
      "op": "sturm_no_positive_roots"
    },
    {
      "op": "positive_at_one"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p30",
  "scale": "35",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "unit_root_factor",
      "k": 4
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p31",
  "scale": "7",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "unit_root_factor",
      "k": 4
    },
    {
      "op": "sturm_no_positive_roots"
    },
    {
      "op": "positive_at_one"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p32",
  "scale": "1",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(5*t^4+5)*R1",
      "t": "(7*t^6-2*t^5+5*t^4+5*t^2-2*t+7)",
      "witness": [
        {
          "factors": [
            {
              "expr": "5*t^4+5"
            },
            {
              "expr": "R1"
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 4
    },
    {
      "op": "sturm_no_positive_roots"
    },
    {
      "op": "positive_at_one"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p33",
  "scale": "5",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(15*t^8+30*t^7+30*t^6+30*t^5+30*t^4+30*t^3+30*t^2+30*t+15)*R1",
      "t": "(21*t^10+35*t^9+56*t^8+36*t^7+67*t^6+50*t^5+67*t^4+36*t^3+56*t^2+35*t+21)",
      "witness": [
        {
          "factors": [
            {
              "expr": "15*t^8+30*t^7+30*t^6+30*t^5+30*t^4+30*t^3+30*t^2+30*t+15"
            },
            {
              "expr": "R1"
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 4
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p34",
  "scale": "1",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(3*t^6+6*t^5+3*t^4+3*t^2+6*t+3)*R1",
      "t": "(4*t^8+9*t^7+t^6+7*t^5+6*t^4+7*t^3+t^2+9*t+4)",
      "witness": [
        {
          "factors": [
            {
              "expr": "3*t^6+6*t^5+3*t^4+3*t^2+6*t+3"
            },
            {
              "expr": "R1"
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 4
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p35",
  "scale": "9",
  "note": "Displayed u_35 lists the radical side first; the polynomial side is the larger one.",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(43*t^14+54*t^13+70*t^12+22*t^11+45*t^10+4*t^9+122*t^8+144*t^7+122*t^6+4*t^5+45*t^4+22*t^3+70*t^2+54*t+43)",
      "t": "(27*t^12+54*t^11+27*t^10+27*t^8+54*t^7+54*t^6+54*t^5+27*t^4+27*t^2+54*t+27)*R1",
      "witness": [
        {
          "factors": [
            {
              "expr": "43*t^14+54*t^13+70*t^12+22*t^11+45*t^10+4*t^9+122*t^8+144*t^7+122*t^6+4*t^5+45*t^4+22*t^3+70*t^2+54*t+43"
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 4
    },
    {
      "op": "sturm_no_positive_roots"
    },
    {
      "op": "positive_at_one"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p36",
  "scale": "63",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "unit_root_factor",
      "k": 4
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p37",
  "scale": "4",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "deflate_zero",
      "k": 1
    },
    {
      "op": "unit_root_factor",
      "k": 2
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p38",
  "scale": "4",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "deflate_zero",
      "k": 1
    },
    {
      "op": "unit_root_factor",
      "k": 2
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p39",
  "scale": "6",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(2*t^2+2)*R1",
      "t": "(t^4+8*t^3-10*t^2+8*t+1)",
      "witness": [
        {
          "factors": [
            {
              "expr": "2*t^2+2"
            },
            {
              "expr": "R1"
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 4
    },
    {
      "op": "sturm_no_positive_roots"
    },
    {
      "op": "positive_at_one"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p40",
  "scale": "13",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "unit_root_factor",
      "k": 2
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p41",
  "scale": "6",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "unit_root_factor",
      "k": 2
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm21.p42",
  "scale": "9",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "unit_root_factor",
      "k": 2
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
        R"certjson({
  "statement_id": "thm31.p04",
  "scale": "3",
  "steps": [
    {
      "op": "expand"
    },
    {
      "op": "split_square",
      "s": "(3*t^4+12*t^3+10*t^2+12*t+3)+(t^2+2*t+1)*R1",
      "t": "(3*t^3+9*t^2+9*t+3)*R2",
      "witness": [
        {
          "factors": [
            {
              "expr": "3*t^4+12*t^3+10*t^2+12*t+3"
            }
          ]
        },
        {
          "factors": [
            {
              "expr": "t^2+2*t+1"
            },
            {
              "expr": "R1"
            }
          ]
        }
      ]
    },
    {
      "op": "split_square",
      "s": "(6*t^6+36*t^5+74*t^4+88*t^3+74*t^2+36*t+6)*R1",
      "t": "(7*t^8+28*t^7+72*t^6+148*t^5+130*t^4+148*t^3+72*t^2+28*t+7)",
      "witness": [
        {
          "factors": [
            {
              "expr": "6*t^6+36*t^5+74*t^4+88*t^3+74*t^2+36*t+6"
            },
            {
              "expr": "R1"
            }
          ]
        }
      ]
    },
    {
      "op": "unit_root_factor",
      "k": 2
    },
    {
      "op": "nonneg_coeffs"
    }
  ]
}
)certjson",
    };
    return data;
}

} // namespace meanineq::certify

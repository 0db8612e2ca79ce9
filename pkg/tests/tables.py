"""Published reference values used by the tests (energies ε = E - iΓ/2)."""

TABLE1_A = (0.0, 0.5, 1.0, 1.5, 2.0)
TABLE1_SH = (-0.079710, -0.037435, -0.033514, -0.039482, -0.045272)
TABLE1_FP = (-0.25, -0.189338, -0.153960, -0.130400, -0.113438)

TABLE2 = {
    2.0: (0.623117 - 0.599545j, 5.260402 - 2.255076j, 8.875649 - 2.603548j,
          11.217715 - 1.995880j, 17.359977 - 2.229026j),
    1.5: (1.009578 - 0.981433j, 3.852457 - 2.106492j, 7.574481 - 2.017753j,
          9.826328 - 2.651538j, 13.723866 - 2.196828j),
    1.0: (1.838241 - 1.632446j, 5.675163 - 1.760804j, 8.749583 - 2.720863j,
          11.835116 - 2.294470j, 15.830298 - 2.343309j),
    0.5: (3.569260 - 1.487849j, 10.233701 - 2.499541j, 13.960171 - 2.280915j,
          17.904306 - 2.258438j, 21.878702 - 2.356575j),
    5e-4: (3.792859 - 0.909297j, 7.852027 - 1.117703j, 11.880118 - 1.242053j,
           15.897157 - 1.331170j, 19.908829 - 1.400707j),
    0.0: (3.792839 - 0.909196j, 7.852012 - 1.117599j, 11.880106 - 1.241947j,
          15.897146 - 1.331064j, 19.908819 - 1.400600j),
}

TABLE3 = {
    2.0: (0.595222 - 0.312336j, 4.211813 - 1.853317j, 7.387244 - 2.485184j,
          10.572524 - 1.985917j, 12.865432 - 2.874092j),
    1.5: (0.846017 - 0.497624j, 6.188284 - 2.213815j, 8.833155 - 2.011628j,
          12.476467 - 2.723854j, 14.938732 - 2.618887j),
    1.0: (1.313699 - 0.776043j, 4.317689 - 1.833635j, 7.338936 - 2.031873j,
          10.901777 - 2.284989j, 14.229903 - 2.730174j),
    0.5: (1.957470 - 0.802720j, 5.720407 - 1.561124j, 9.297545 - 2.218137j,
          12.626496 - 2.505935j, 16.213699 - 2.433756j),
    5e-4: (2.076264 - 0.718026j, 6.065577 - 1.025854j, 10.058023 - 1.181640j,
           14.052696 - 1.286283j, 18.048705 - 1.360061j),
    0.0: (2.076211 - 0.718123j, 6.065549 - 1.025956j, 10.058003 - 1.181793j,
          14.052679 - 1.286389j, 18.048690 - 1.365109j),
}

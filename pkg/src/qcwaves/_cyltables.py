"""Frozen Chebyshev tables for the cylinder-function amplitude factors.

Generated by tools/generate_cylinder_tables.py; do not edit by hand.
"""

XCUT = 4.0

P0 = (
    0.997937296529014587,
    -0.00202184304465883237,
    0.0000387640309523590641,
    -1.91635862936584184e-6,
    1.58559192733412682e-7,
    -1.82521893225921557e-8,
    2.65036367412070542e-9,
    -4.57837900024003601e-10,
    9.05767316147212614e-11,
    -1.99915173347798453e-11,
    4.83061788775914541e-12,
    -1.25998629474721788e-12,
    3.50936733425872035e-13,
    -1.03487053816081396e-13,
    3.20893309901961231e-14,
    -1.04044852680372604e-14,
    3.51115036403937790e-15,
    -1.22844045641828654e-15,
    4.44116857967074133e-16,
    -1.65442284479170131e-16,
    6.33484597648720052e-17,
    -2.48792187731184073e-17,
    1.00030454334996037e-17,
    -4.11053017159936375e-18,
    1.72374275403043999e-18,
    -7.36521358085356178e-19,
    3.19934921696667778e-19,
    -1.40438645308135224e-19,
    6.07821283544478364e-20,
    -2.27873880456388163e-20,
)

QT0 = (
    -0.983699817300899267,
    0.0157127038431033298,
    -0.000545593693210368676,
    0.0000374107660833052906,
    -3.84802326664140713e-6,
    5.19797199714012936e-7,
    -8.55408474138357576e-8,
    1.63662926051796038e-8,
    -3.52867163116519567e-9,
    8.38737612328903547e-10,
    -2.16279430196903171e-10,
    5.97719753882558136e-11,
    -1.75375917405353768e-11,
    5.42216358823224489e-12,
    -1.75576915539345635e-12,
    5.92495249355945776e-13,
    -2.07499106649817674e-13,
    7.51510926996963115e-14,
    -2.80634249955031302e-14,
    1.07773558988001914e-14,
    -4.24695607946205495e-15,
    1.71390616541193395e-15,
    -7.07115861931466189e-16,
    2.97796835362684130e-16,
    -1.27837942568129670e-16,
    5.58555029767133348e-17,
    -2.47825276734301695e-17,
    1.10953406593723568e-17,
    -4.88559842241604827e-18,
    1.85466211125582344e-18,
)

P1 = (
    1.00348649872987863,
    0.00343278670714091752,
    -0.0000511659016439004652,
    2.33576752762276459e-6,
    -1.85833441946803341e-7,
    2.08946166601564511e-8,
    -2.98640421093254100e-9,
    5.09994079278582923e-10,
    -1.00012718784302835e-10,
    2.19206823174292109e-11,
    -5.26663017916523616e-12,
    1.36717009474332103e-12,
    -3.79244026150074916e-13,
    1.11441679920855813e-13,
    -3.44495618977372900e-14,
    1.11393224384673574e-14,
    -3.74998300692102720e-15,
    1.30912559921732996e-15,
    -4.72346856930111960e-16,
    1.75639837899093942e-16,
    -6.71414839962176546e-17,
    2.63285534518899151e-17,
    -1.05707985895188476e-17,
    4.33813157881373398e-18,
    -1.81696212550356109e-18,
    7.75466394050209887e-19,
    -3.36494519796132091e-19,
    1.47564170062164796e-19,
    -6.38125842418816606e-20,
    2.39091043220566432e-20,
)

QT1 = (
    2.97685724396452735,
    -0.0224094293222541442,
    0.000683741167942750805,
    -0.0000444397073564044938,
    4.43860045666782353e-6,
    -5.88437794331814973e-7,
    9.55746036189725131e-8,
    -1.81081305714902764e-8,
    3.87458687472390227e-9,
    -9.15320028056021085e-10,
    2.34831104475152543e-10,
    -6.46211808356485661e-11,
    1.88906792059621580e-11,
    -5.82180623819924193e-12,
    1.87986360922778600e-12,
    -6.32780928319516393e-13,
    2.21109228941521055e-13,
    -7.99176232896423826e-14,
    2.97882358957134875e-14,
    -1.14204176486112957e-14,
    4.49337539043050030e-15,
    -1.81075230412514415e-15,
    7.46079742971972392e-16,
    -3.13817934625861246e-16,
    1.34560177141995472e-16,
    -5.87293065942028552e-17,
    2.60314866724041799e-17,
    -1.16438321947530055e-17,
    5.12307948649407455e-18,
    -1.94371946762923723e-18,
)

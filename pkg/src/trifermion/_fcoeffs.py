"""Coefficients of the degree-8 elimination polynomial f(t) = sum_k c_k t^k.

``F_COEFFS[k] = (prefactor, terms)`` where ``terms`` lists ``(exponents, coeff)``
and ``exponents`` are the powers of (M1, ..., M6).  Generated from the LaTeX
source; do not edit by hand.
"""

F_COEFFS = {
    0: (
        972,
        (
            ((0, 1, 0, 1, 2, 1), -64),
            ((0, 2, 0, 1, 3, 0), 16),
            ((0, 2, 0, 2, 2, 0), 16),
            ((0, 3, 0, 0, 2, 1), 16),
            ((0, 4, 0, 1, 2, 0), -8),
            ((0, 1, 0, 0, 3, 1), -16),
            ((0, 0, 0, 2, 3, 0), -16),
            ((0, 0, 0, 1, 4, 0), -8),
            ((0, 0, 0, 0, 2, 2), 64),
            ((0, 2, 0, 0, 4, 0), 3),
            ((0, 4, 0, 0, 3, 0), -3),
            ((0, 6, 0, 0, 2, 0), 1),
            ((0, 0, 0, 0, 5, 0), -1),
        ),
    ),
    1: (
        1296,
        (
            ((1, 5, 0, 0, 2, 0), 3),
            ((0, 4, 1, 0, 2, 0), -9),
            ((1, 0, 0, 0, 3, 1), 36),
            ((0, 0, 1, 1, 3, 0), -32),
            ((1, 1, 0, 0, 1, 2), -64),
            ((1, 7, 0, 0, 1, 0), -1),
            ((1, 1, 0, 1, 3, 0), 4),
            ((0, 0, 1, 0, 1, 2), 128),
            ((0, 2, 1, 1, 2, 0), 48),
            ((0, 2, 1, 2, 1, 0), 32),
            ((1, 0, 0, 1, 2, 1), 48),
            ((0, 4, 1, 1, 1, 0), -16),
            ((0, 1, 1, 0, 2, 1), -48),
            ((1, 2, 0, 0, 2, 1), 12),
            ((0, 3, 1, 0, 1, 1), 32),
            ((1, 3, 0, 1, 2, 0), -12),
            ((1, 5, 0, 1, 1, 0), 8),
            ((1, 4, 0, 0, 1, 1), -16),
            ((1, 3, 0, 2, 1, 0), -16),
            ((1, 2, 0, 1, 1, 1), 64),
            ((0, 1, 1, 1, 1, 1), -128),
            ((1, 1, 0, 0, 4, 0), 1),
            ((0, 2, 1, 0, 3, 0), 12),
            ((1, 3, 0, 0, 3, 0), -3),
            ((0, 0, 1, 2, 2, 0), -48),
            ((0, 6, 1, 0, 1, 0), 2),
            ((0, 0, 1, 0, 4, 0), -5),
        ),
    ),
    2: (
        108,
        (
            ((0, 2, 2, 2, 0, 0), 256),
            ((0, 1, 0, 2, 2, 0), 2736),
            ((0, 1, 0, 1, 3, 0), 252),
            ((0, 1, 0, 1, 0, 2), -55296),
            ((0, 5, 0, 1, 1, 0), 2124),
            ((0, 4, 2, 1, 0, 0), -128),
            ((0, 3, 0, 2, 1, 0), -6192),
            ((0, 3, 2, 0, 0, 1), 256),
            ((0, 4, 0, 1, 0, 1), -13824),
            ((0, 0, 0, 2, 1, 1), -10368),
            ((0, 0, 2, 1, 2, 0), -768),
            ((0, 3, 0, 3, 0, 0), -4608),
            ((0, 7, 0, 1, 0, 0), -864),
            ((0, 7, 0, 0, 1, 0), -225),
            ((0, 6, 2, 0, 0, 0), 16),
            ((0, 5, 0, 0, 2, 0), 207),
            ((0, 0, 2, 0, 0, 2), 1024),
            ((0, 1, 0, 0, 4, 0), -27),
            ((0, 5, 0, 2, 0, 0), 3456),
            ((0, 6, 0, 0, 0, 1), 1728),
            ((2, 0, 0, 0, 4, 0), -18),
            ((0, 0, 0, 0, 3, 1), -1224),
            ((0, 3, 0, 0, 0, 2), 13824),
            ((0, 3, 0, 0, 3, 0), -27),
            ((2, 8, 0, 0, 0, 0), 4),
            ((0, 0, 2, 0, 3, 0), -160),
            ((1, 0, 1, 1, 1, 1), 1536),
            ((2, 1, 0, 1, 1, 1), -1920),
            ((1, 1, 1, 1, 2, 0), 192),
            ((1, 2, 1, 0, 1, 1), 384),
            ((1, 2, 1, 1, 0, 1), 1024),
            ((1, 3, 1, 1, 1, 0), -384),
            ((0, 9, 0, 0, 0, 0), 72),
            ((0, 0, 0, 0, 0, 3), 36864),
            ((0, 2, 2, 1, 1, 0), 768),
            ((0, 1, 2, 0, 1, 1), -768),
            ((1, 0, 1, 0, 2, 1), 1728),
            ((1, 7, 1, 0, 0, 0), -16),
            ((1, 3, 1, 2, 0, 0), -256),
            ((1, 3, 1, 0, 2, 0), -144),
            ((2, 1, 0, 0, 2, 1), -1440),
            ((1, 4, 1, 0, 0, 1), -256),
            ((1, 5, 1, 1, 0, 0), 128),
            ((2, 2, 0, 2, 1, 0), 480),
            ((1, 5, 1, 0, 1, 0), 96),
            ((0, 2, 0, 1, 1, 1), 14400),
            ((1, 1, 1, 0, 0, 2), -1024),
            ((1, 1, 1, 0, 3, 0), 64),
            ((2, 2, 0, 1, 2, 0), 528),
            ((0, 2, 0, 0, 2, 1), 1872),
            ((0, 0, 2, 2, 1, 0), -768),
            ((2, 4, 0, 2, 0, 0), 64),
            ((0, 3, 0, 1, 2, 0), -1512),
            ((2, 0, 0, 1, 3, 0), -288),
            ((2, 2, 0, 0, 0, 2), 256),
            ((0, 2, 0, 2, 0, 1), 27648),
            ((0, 1, 0, 3, 1, 0), 5184),
            ((0, 4, 2, 0, 1, 0), -144),
            ((0, 1, 0, 0, 1, 2), -9216),
            ((0, 0, 0, 1, 2, 1), -6336),
            ((2, 2, 0, 0, 3, 0), 98),
            ((0, 4, 0, 0, 1, 1), -2952),
            ((2, 6, 0, 0, 1, 0), 6),
            ((2, 6, 0, 1, 0, 0), -32),
            ((2, 0, 0, 0, 1, 2), 1152),
            ((2, 5, 0, 0, 0, 1), 64),
            ((2, 0, 0, 2, 2, 0), -288),
            ((2, 4, 0, 0, 2, 0), -90),
            ((2, 3, 0, 0, 1, 1), 288),
            ((2, 4, 0, 1, 1, 0), -144),
            ((2, 3, 0, 1, 0, 1), -256),
            ((0, 1, 2, 1, 0, 1), -1024),
            ((0, 2, 2, 0, 2, 0), 288),
        ),
    ),
    3: (
        36,
        (
            ((0, 1, 3, 0, 0, 1), -1024),
            ((1, 6, 0, 1, 0, 0), 3528),
            ((0, 1, 1, 3, 0, 0), 20736),
            ((1, 4, 0, 0, 2, 0), -81),
            ((0, 0, 1, 0, 2, 1), -14688),
            ((0, 3, 1, 0, 2, 0), -324),
            ((0, 0, 3, 1, 1, 0), -2048),
            ((1, 0, 0, 1, 3, 0), 1404),
            ((3, 3, 0, 2, 0, 0), -832),
            ((3, 3, 0, 0, 2, 0), -172),
            ((1, 0, 0, 2, 2, 0), -5616),
            ((0, 2, 3, 0, 1, 0), 768),
            ((3, 4, 0, 0, 0, 1), -640),
            ((1, 0, 0, 0, 1, 2), 82944),
            ((0, 5, 1, 1, 0, 0), 8496),
            ((0, 5, 1, 0, 1, 0), 1656),
            ((3, 5, 0, 1, 0, 0), 352),
            ((0, 0, 1, 2, 0, 1), -41472),
            ((0, 3, 1, 2, 0, 0), -24768),
            ((3, 0, 0, 0, 2, 1), 4320),
            ((1, 0, 0, 1, 0, 2), 165888),
            ((1, 2, 0, 0, 0, 2), -23040),
            ((1, 5, 0, 0, 0, 1), -4464),
            ((2, 0, 1, 0, 3, 0), -288),
            ((2, 6, 1, 0, 0, 0), 24),
            ((1, 2, 0, 3, 0, 0), 31104),
            ((1, 4, 0, 2, 0, 0), -18720),
            ((1, 0, 0, 3, 1, 0), -15552),
            ((0, 1, 1, 0, 0, 2), -36864),
            ((3, 5, 0, 0, 1, 0), 300),
            ((0, 1, 1, 0, 3, 0), -432),
            ((3, 1, 0, 0, 0, 2), -2304),
            ((0, 4, 1, 0, 0, 1), -11808),
            ((1, 2, 0, 0, 3, 0), -567),
            ((3, 1, 0, 0, 3, 0), 36),
            ((2, 0, 1, 0, 0, 2), 4608),
            ((1, 3, 2, 0, 1, 0), -576),
            ((1, 3, 2, 1, 0, 0), -768),
            ((1, 4, 0, 1, 1, 0), -6372),
            ((3, 3, 0, 1, 1, 0), -1184),
            ((1, 3, 0, 1, 0, 1), 54144),
            ((0, 1, 1, 1, 2, 0), 3024),
            ((0, 3, 1, 1, 1, 0), -12096),
            ((1, 0, 2, 0, 1, 1), 6912),
            ((2, 4, 1, 1, 0, 0), -576),
            ((2, 4, 1, 0, 1, 0), -720),
            ((2, 2, 1, 0, 2, 0), 1176),
            ((3, 2, 0, 1, 0, 1), 3072),
            ((3, 2, 0, 0, 1, 1), 3168),
            ((2, 3, 1, 0, 0, 1), 1152),
            ((0, 2, 1, 1, 0, 1), 57600),
            ((0, 1, 1, 2, 1, 0), 21888),
            ((1, 0, 2, 1, 0, 1), 3072),
            ((1, 1, 0, 0, 2, 1), 11664),
            ((1, 2, 0, 1, 2, 0), 864),
            ((1, 1, 2, 0, 2, 0), 384),
            ((1, 1, 0, 2, 0, 1), -145152),
            ((3, 0, 0, 1, 1, 1), 3456),
            ((1, 2, 0, 2, 1, 0), 19728),
            ((3, 1, 0, 2, 1, 0), -576),
            ((0, 0, 1, 1, 1, 1), -50688),
            ((0, 2, 1, 0, 1, 1), 14976),
            ((2, 0, 1, 2, 1, 0), -2304),
            ((2, 0, 1, 1, 2, 0), -3456),
            ((2, 2, 1, 2, 0, 0), 1920),
            ((1, 2, 2, 0, 0, 1), 768),
            ((1, 3, 0, 0, 1, 1), 12384),
            ((1, 8, 0, 0, 0, 0), -198),
            ((1, 0, 0, 0, 4, 0), 243),
            ((0, 0, 3, 0, 2, 0), -640),
            ((3, 7, 0, 0, 0, 0), -36),
            ((0, 0, 3, 2, 0, 0), -1024),
            ((0, 7, 1, 0, 0, 0), -900),
            ((0, 4, 3, 0, 0, 0), -192),
            ((2, 1, 1, 1, 0, 1), -7680),
            ((2, 1, 1, 0, 1, 1), -11520),
            ((1, 1, 0, 1, 1, 1), -54144),
            ((1, 1, 2, 1, 1, 0), 768),
            ((2, 2, 1, 1, 1, 0), 4224),
            ((1, 5, 2, 0, 0, 0), 192),
            ((1, 6, 0, 0, 1, 0), 603),
            ((0, 2, 3, 1, 0, 0), 1024),
        ),
    ),
    4: (
        3,
        (
            ((0, 8, 0, 0, 0, 0), -8667),
            ((4, 0, 0, 0, 3, 0), -324),
            ((0, 0, 0, 0, 1, 2), -1492992),
            ((4, 0, 0, 0, 0, 2), 20736),
            ((4, 6, 0, 0, 0, 0), -444),
            ((2, 7, 0, 0, 0, 0), -16236),
            ((0, 0, 0, 2, 2, 0), -2592),
            ((0, 4, 0, 0, 2, 0), -11826),
            ((0, 5, 2, 0, 0, 0), 13248),
            ((0, 0, 0, 3, 1, 0), -186624),
            ((0, 2, 0, 3, 0, 0), 311040),
            ((0, 0, 4, 0, 1, 0), -5120),
            ((0, 0, 4, 1, 0, 0), -8192),
            ((0, 0, 0, 1, 0, 2), -3981312),
            ((0, 2, 0, 0, 0, 2), 331776),
            ((0, 4, 0, 2, 0, 0), -189216),
            ((0, 5, 0, 0, 0, 1), -10368),
            ((0, 6, 0, 0, 1, 0), 17820),
            ((0, 6, 0, 1, 0, 0), 71280),
            ((0, 2, 4, 0, 0, 0), 3072),
            ((3, 3, 1, 0, 1, 0), -5504),
            ((0, 0, 0, 0, 4, 0), -2187),
            ((4, 2, 0, 1, 1, 0), 29376),
            ((3, 3, 1, 1, 0, 0), -18944),
            ((4, 1, 0, 1, 0, 1), -48384),
            ((4, 1, 0, 0, 1, 1), -95040),
            ((1, 3, 1, 0, 0, 1), 198144),
            ((1, 4, 1, 0, 1, 0), -2592),
            ((1, 4, 1, 1, 0, 0), -101952),
            ((2, 0, 0, 1, 1, 1), -20736),
            ((2, 1, 2, 0, 0, 1), -92160),
            ((2, 0, 2, 1, 1, 0), -55296),
            ((2, 2, 2, 1, 0, 0), 33792),
            ((2, 2, 2, 0, 1, 0), 18816),
            ((2, 1, 0, 2, 1, 0), 219456),
            ((2, 2, 0, 0, 1, 1), -112320),
            ((1, 2, 1, 2, 0, 0), 315648),
            ((1, 1, 3, 1, 0, 0), 4096),
            ((3, 1, 1, 0, 2, 0), 1728),
            ((3, 0, 1, 0, 1, 1), 138240),
            ((1, 1, 3, 0, 1, 0), 4096),
            ((3, 1, 1, 2, 0, 0), -9216),
            ((0, 1, 0, 1, 1, 1), 663552),
            ((3, 0, 1, 1, 0, 1), 55296),
            ((2, 2, 0, 1, 0, 1), 1052928),
            ((1, 2, 1, 0, 2, 0), -27216),
            ((2, 1, 0, 1, 2, 0), 16848),
            ((1, 0, 1, 1, 2, 0), 67392),
            ((0, 1, 2, 1, 1, 0), 48384),
            ((1, 0, 1, 2, 1, 0), -179712),
            ((2, 3, 0, 1, 1, 0), -95904),
            ((3, 2, 1, 0, 0, 1), 50688),
            ((2, 4, 2, 0, 0, 0), -5760),
            ((1, 0, 1, 0, 3, 0), 15552),
            ((2, 5, 0, 1, 0, 0), 120528),
            ((2, 1, 0, 3, 0, 0), -186624),
            ((2, 1, 0, 0, 0, 2), -1492992),
            ((2, 3, 0, 2, 0, 0), -175680),
            ((2, 0, 2, 0, 2, 0), -6912),
            ((2, 4, 0, 0, 0, 1), -297504),
            ((4, 0, 0, 1, 2, 0), -12960),
            ((0, 2, 0, 1, 2, 0), 53136),
            ((2, 1, 0, 0, 3, 0), -324),
            ((4, 4, 0, 1, 0, 0), -1568),
            ((4, 4, 0, 0, 1, 0), -5708),
            ((4, 3, 0, 0, 0, 1), -1728),
            ((4, 0, 0, 2, 1, 0), -5184),
            ((0, 1, 2, 0, 2, 0), -10368),
            ((2, 0, 0, 0, 2, 1), -209952),
            ((3, 5, 1, 0, 0, 0), 4800),
            ((0, 3, 0, 0, 1, 1), -82944),
            ((4, 2, 0, 0, 2, 0), 4428),
            ((1, 0, 1, 0, 0, 2), 1327104),
            ((0, 1, 0, 0, 2, 1), -155520),
            ((0, 3, 2, 1, 0, 0), -96768),
            ((0, 3, 2, 0, 1, 0), -5184),
            ((0, 1, 0, 2, 0, 1), 2488320),
            ((0, 0, 2, 1, 0, 1), -405504),
            ((0, 0, 2, 0, 1, 1), -235008),
            ((0, 2, 2, 0, 0, 1), 119808),
            ((0, 4, 0, 1, 1, 0), -112752),
            ((1, 0, 1, 3, 0, 0), -248832),
            ((0, 1, 2, 2, 0, 0), 175104),
            ((0, 2, 0, 2, 1, 0), 212544),
            ((2, 0, 2, 2, 0, 0), -18432),
            ((2, 0, 0, 2, 0, 1), 622080),
            ((1, 3, 3, 0, 0, 0), -3072),
            ((1, 6, 1, 0, 0, 0), 9648),
            ((1, 0, 3, 0, 0, 1), 36864),
            ((4, 2, 0, 2, 0, 0), 14400),
            ((2, 3, 0, 0, 2, 0), 2268),
            ((2, 5, 0, 0, 1, 0), 11988),
            ((1, 1, 1, 0, 1, 1), 373248),
            ((1, 2, 1, 1, 1, 0), 27648),
            ((1, 1, 1, 1, 0, 1), -866304),
            ((0, 3, 0, 1, 0, 1), -580608),
            ((0, 0, 0, 1, 3, 0), -11664),
            ((0, 0, 0, 4, 0, 0), -559872),
            ((0, 2, 0, 0, 3, 0), 4860),
        ),
    ),
    5: (
        4,
        (
            ((0, 0, 5, 0, 0, 0), -1024),
            ((1, 3, 0, 2, 0, 0), 632448),
            ((2, 5, 1, 0, 0, 0), 11988),
            ((0, 4, 1, 0, 1, 0), -23652),
            ((0, 1, 3, 0, 1, 0), -6912),
            ((0, 1, 3, 1, 0, 0), 16128),
            ((3, 0, 0, 2, 1, 0), -159408),
            ((0, 3, 1, 0, 0, 1), -82944),
            ((3, 0, 2, 0, 0, 1), 69120),
            ((2, 0, 3, 1, 0, 0), -18432),
            ((2, 0, 3, 0, 1, 0), -4608),
            ((2, 2, 3, 0, 0, 0), 6272),
            ((1, 1, 4, 0, 0, 0), 1024),
            ((5, 1, 0, 2, 0, 0), -5184),
            ((1, 4, 2, 0, 0, 0), -1296),
            ((1, 1, 0, 3, 0, 0), 186624),
            ((1, 0, 2, 2, 0, 0), -89856),
            ((1, 4, 0, 0, 0, 1), 1029024),
            ((3, 2, 0, 0, 2, 0), -13365),
            ((1, 3, 0, 0, 2, 0), 19440),
            ((0, 0, 1, 1, 2, 0), -34992),
            ((0, 2, 1, 0, 2, 0), 14580),
            ((4, 0, 1, 2, 0, 0), -5184),
            ((5, 0, 0, 1, 0, 1), 15552),
            ((5, 0, 0, 0, 1, 1), 42768),
            ((3, 4, 0, 1, 0, 0), -185940),
            ((3, 3, 2, 0, 0, 0), -2752),
            ((0, 0, 1, 2, 1, 0), -5184),
            ((1, 0, 0, 0, 2, 1), 349920),
            ((1, 1, 0, 0, 0, 2), 5225472),
            ((1, 0, 0, 2, 0, 1), 373248),
            ((5, 3, 0, 0, 1, 0), 576),
            ((5, 2, 0, 0, 0, 1), 26352),
            ((5, 3, 0, 1, 0, 0), -8496),
            ((4, 4, 1, 0, 0, 0), -5708),
            ((3, 3, 0, 0, 0, 1), 384768),
            ((3, 2, 0, 2, 0, 0), 375408),
            ((3, 0, 0, 1, 2, 0), 39852),
            ((4, 0, 1, 0, 2, 0), -972),
            ((1, 0, 2, 0, 2, 0), 23328),
            ((1, 5, 0, 0, 1, 0), -59616),
            ((0, 4, 1, 1, 0, 0), -112752),
            ((3, 4, 0, 0, 1, 0), 2241),
            ((1, 7, 0, 0, 0, 0), 40176),
            ((0, 2, 1, 2, 0, 0), 212544),
            ((0, 6, 1, 0, 0, 0), 17820),
            ((2, 0, 1, 0, 1, 1), -419904),
            ((2, 3, 1, 0, 1, 0), 4536),
            ((2, 1, 1, 0, 2, 0), -972),
            ((1, 2, 0, 0, 1, 1), -279936),
            ((3, 1, 0, 0, 1, 1), 248832),
            ((1, 2, 2, 1, 0, 0), 13824),
            ((1, 5, 0, 1, 0, 0), -330480),
            ((0, 0, 1, 3, 0, 0), -186624),
            ((0, 0, 1, 0, 0, 2), -1492992),
            ((0, 0, 3, 0, 0, 1), -78336),
            ((3, 0, 0, 3, 0, 0), -15552),
            ((3, 6, 0, 0, 0, 0), 22977),
            ((3, 0, 0, 0, 0, 2), 1119744),
            ((3, 0, 0, 0, 3, 0), 243),
            ((0, 3, 3, 0, 0, 0), -1728),
            ((5, 5, 0, 0, 0, 0), 2240),
            ((0, 0, 1, 0, 3, 0), -8748),
            ((2, 1, 1, 1, 1, 0), 33696),
            ((4, 2, 1, 1, 0, 0), 29376),
            ((4, 2, 1, 0, 1, 0), 8856),
            ((4, 1, 1, 0, 0, 1), -95040),
            ((4, 0, 1, 1, 1, 0), -25920),
            ((2, 0, 1, 1, 0, 1), -20736),
            ((2, 1, 1, 2, 0, 0), 219456),
            ((0, 1, 1, 0, 1, 1), -311040),
            ((5, 1, 0, 1, 1, 0), -6480),
            ((0, 1, 1, 1, 0, 1), 663552),
            ((2, 3, 1, 1, 0, 0), -95904),
            ((2, 2, 1, 0, 0, 1), -112320),
            ((3, 1, 2, 0, 1, 0), 1728),
            ((1, 2, 2, 0, 1, 0), -27216),
            ((0, 2, 1, 1, 1, 0), 106272),
            ((1, 3, 0, 1, 1, 0), 386208),
            ((1, 1, 0, 1, 2, 0), -97200),
            ((1, 0, 2, 1, 1, 0), 67392),
            ((1, 1, 2, 0, 0, 1), 186624),
            ((1, 2, 0, 1, 0, 1), -4375296),
            ((3, 1, 0, 1, 0, 1), -1451520),
            ((1, 0, 0, 1, 1, 1), 746496),
            ((1, 1, 0, 2, 1, 0), -611712),
            ((3, 2, 0, 1, 1, 0), 18792),
        ),
    ),
    6: (
        48,
        (
            ((3, 1, 3, 0, 0, 0), 64),
            ((6, 2, 0, 1, 0, 0), 1044),
            ((4, 0, 0, 1, 0, 1), 44064),
            ((2, 3, 2, 0, 0, 0), 252),
            ((1, 2, 3, 0, 0, 0), -1008),
            ((4, 3, 0, 1, 0, 0), 6924),
            ((4, 0, 2, 0, 1, 0), -108),
            ((3, 4, 1, 0, 0, 0), 249),
            ((1, 0, 3, 0, 1, 0), 1728),
            ((3, 0, 1, 0, 2, 0), 81),
            ((4, 3, 0, 0, 1, 0), -972),
            ((0, 2, 2, 0, 1, 0), 1620),
            ((2, 2, 0, 0, 2, 0), 810),
            ((1, 0, 3, 1, 0, 0), 2496),
            ((2, 4, 0, 0, 1, 0), 3996),
            ((0, 2, 2, 1, 0, 0), 5904),
            ((1, 5, 1, 0, 0, 0), -6624),
            ((2, 2, 0, 2, 0, 0), -84528),
            ((2, 0, 2, 0, 0, 1), -23328),
            ((6, 2, 0, 0, 1, 0), 108),
            ((0, 1, 2, 0, 0, 1), -17280),
            ((0, 0, 2, 1, 1, 0), -3888),
            ((6, 0, 0, 1, 1, 0), -324),
            ((3, 0, 1, 2, 0, 0), -17712),
            ((5, 3, 1, 0, 0, 0), 64),
            ((6, 1, 0, 0, 0, 1), -3024),
            ((4, 2, 0, 0, 0, 1), -15120),
            ((4, 0, 0, 0, 1, 1), -15552),
            ((2, 3, 0, 0, 0, 1), -142128),
            ((0, 2, 0, 1, 0, 1), 285120),
            ((0, 2, 0, 0, 1, 1), 19440),
            ((0, 0, 0, 1, 1, 1), -46656),
            ((0, 1, 0, 2, 1, 0), 25920),
            ((2, 0, 0, 2, 1, 0), 45360),
            ((4, 0, 2, 1, 0, 0), -1440),
            ((4, 1, 0, 2, 0, 0), -12528),
            ((4, 2, 2, 0, 0, 0), 492),
            ((5, 0, 1, 0, 0, 1), 4752),
            ((0, 1, 0, 1, 2, 0), 5832),
            ((0, 7, 0, 0, 0, 0), -1296),
            ((0, 5, 0, 1, 0, 0), 11016),
            ((0, 4, 2, 0, 0, 0), -1314),
            ((0, 3, 0, 2, 0, 0), -15552),
            ((1, 3, 1, 1, 0, 0), 42912),
            ((0, 3, 0, 1, 1, 0), -16848),
            ((0, 3, 0, 0, 2, 0), -1296),
            ((2, 0, 0, 1, 2, 0), -2430),
            ((0, 0, 0, 2, 0, 1), -31104),
            ((0, 0, 0, 0, 2, 1), -17496),
            ((0, 1, 0, 0, 0, 2), -373248),
            ((6, 4, 0, 0, 0, 0), -236),
            ((2, 0, 4, 0, 0, 0), -128),
            ((2, 0, 0, 3, 0, 0), -38880),
            ((4, 5, 0, 0, 0, 0), -900),
            ((0, 5, 0, 0, 1, 0), 2592),
            ((0, 0, 2, 0, 2, 0), -1458),
            ((2, 0, 0, 0, 0, 2), -653184),
            ((0, 4, 0, 0, 0, 1), -64152),
            ((0, 1, 4, 0, 0, 0), -192),
            ((2, 2, 0, 1, 1, 0), -25812),
            ((1, 3, 1, 0, 1, 0), 4320),
            ((2, 1, 2, 0, 1, 0), -108),
            ((1, 1, 1, 2, 0, 0), -67968),
            ((3, 2, 1, 1, 0, 0), 2088),
            ((1, 0, 1, 0, 1, 1), 77760),
            ((2, 1, 0, 0, 1, 1), -11664),
            ((5, 1, 1, 1, 0, 0), -720),
            ((1, 2, 1, 0, 0, 1), -31104),
            ((3, 2, 1, 0, 1, 0), -2970),
            ((3, 1, 1, 0, 0, 1), 27648),
            ((2, 1, 0, 1, 0, 1), 575424),
            ((1, 0, 1, 1, 0, 1), 82944),
            ((2, 1, 2, 1, 0, 0), 1872),
            ((4, 1, 0, 1, 1, 0), 4644),
            ((3, 0, 1, 1, 1, 0), 8856),
            ((1, 1, 1, 1, 1, 0), -21600),
            ((0, 0, 2, 2, 0, 0), -288),
            ((0, 1, 0, 3, 0, 0), -31104),
            ((2, 6, 0, 0, 0, 0), -5958),
            ((2, 4, 0, 1, 0, 0), 47538),
        ),
    ),
    7: (
        576,
        (
            ((0, 3, 1, 0, 1, 0), -288),
            ((1, 2, 0, 1, 1, 0), 1728),
            ((0, 1, 1, 1, 1, 0), 1296),
            ((0, 2, 3, 0, 0, 0), 60),
            ((1, 1, 2, 1, 0, 0), -1200),
            ((1, 4, 0, 0, 1, 0), -288),
            ((2, 2, 1, 1, 0, 0), -2868),
            ((1, 0, 4, 0, 0, 0), 48),
            ((7, 3, 0, 0, 0, 0), 8),
            ((0, 0, 3, 0, 1, 0), -108),
            ((5, 4, 0, 0, 0, 0), 5),
            ((7, 0, 0, 0, 0, 1), 108),
            ((5, 0, 0, 2, 0, 0), -108),
            ((1, 0, 0, 0, 0, 2), 93312),
            ((4, 0, 3, 0, 0, 0), -4),
            ((1, 3, 2, 0, 0, 0), 240),
            ((1, 4, 0, 1, 0, 0), -2304),
            ((3, 3, 0, 1, 0, 0), -2028),
            ((0, 3, 1, 1, 0, 0), -1872),
            ((2, 4, 1, 0, 0, 0), 444),
            ((0, 1, 1, 2, 0, 0), 2880),
            ((1, 2, 0, 2, 0, 0), 2016),
            ((3, 1, 0, 2, 0, 0), 3744),
            ((2, 0, 1, 2, 0, 0), 5040),
            ((5, 2, 0, 1, 0, 0), -3),
            ((3, 0, 0, 0, 1, 1), 972),
            ((3, 0, 0, 1, 0, 1), -11664),
            ((4, 3, 1, 0, 0, 0), -108),
            ((3, 3, 0, 0, 1, 0), 72),
            ((5, 2, 0, 0, 1, 0), -9),
            ((6, 2, 1, 0, 0, 0), 12),
            ((2, 1, 3, 0, 0, 0), -4),
            ((3, 0, 2, 1, 0, 0), 492),
            ((5, 0, 0, 1, 1, 0), 27),
            ((7, 1, 0, 1, 0, 0), -36),
            ((6, 0, 1, 1, 0, 0), -36),
            ((4, 0, 1, 0, 0, 1), -1728),
            ((3, 2, 0, 0, 0, 1), 3780),
            ((5, 1, 0, 0, 0, 1), 216),
            ((1, 3, 0, 0, 0, 1), 15552),
            ((0, 0, 1, 0, 1, 1), -3888),
            ((1, 0, 2, 0, 0, 1), 4320),
            ((1, 0, 0, 2, 1, 0), -2592),
            ((0, 0, 1, 1, 0, 1), -5184),
            ((0, 2, 1, 0, 0, 1), 2160),
            ((3, 2, 2, 0, 0, 0), -165),
            ((3, 0, 2, 0, 1, 0), 9),
            ((0, 0, 3, 1, 0, 0), -144),
            ((3, 1, 0, 1, 1, 0), -324),
            ((2, 2, 1, 0, 1, 0), 180),
            ((4, 1, 1, 1, 0, 0), 516),
            ((1, 1, 0, 1, 0, 1), -67392),
            ((2, 1, 1, 0, 0, 1), -1296),
            ((2, 0, 1, 1, 1, 0), -540),
            ((1, 6, 0, 0, 0, 0), 288),
            ((3, 5, 0, 0, 0, 0), 264),
            ((0, 5, 1, 0, 0, 0), 288),
            ((1, 0, 0, 3, 0, 0), 10368),
        ),
    ),
    8: (
        2304,
        (
            ((1, 4, 1, 0, 0, 0), -96),
            ((0, 3, 2, 0, 0, 0), -48),
            ((0, 0, 0, 3, 0, 0), -1728),
            ((1, 2, 1, 1, 0, 0), 576),
            ((0, 0, 2, 0, 0, 1), -648),
            ((3, 0, 3, 0, 0, 0), 1),
            ((6, 0, 0, 0, 0, 1), -27),
            ((6, 3, 0, 0, 0, 0), -2),
            ((0, 0, 4, 0, 0, 0), -9),
            ((0, 2, 0, 2, 0, 0), 432),
            ((3, 3, 1, 0, 0, 0), 24),
            ((2, 0, 2, 1, 0, 0), -90),
            ((2, 2, 2, 0, 0, 0), 30),
            ((2, 1, 0, 2, 0, 0), -648),
            ((0, 0, 0, 0, 0, 2), -11664),
            ((4, 2, 0, 1, 0, 0), -18),
            ((5, 2, 1, 0, 0, 0), -3),
            ((3, 0, 1, 0, 0, 1), 324),
            ((0, 1, 0, 1, 0, 1), 7776),
            ((6, 1, 0, 1, 0, 0), 9),
            ((5, 0, 1, 1, 0, 0), 9),
            ((2, 2, 0, 0, 0, 1), -648),
            ((1, 0, 1, 2, 0, 0), -864),
            ((3, 1, 1, 1, 0, 0), -108),
            ((0, 3, 0, 0, 0, 1), -1728),
            ((4, 0, 0, 2, 0, 0), 27),
            ((4, 4, 0, 0, 0, 0), 3),
            ((2, 0, 0, 1, 0, 1), 1944),
            ((2, 3, 0, 1, 0, 0), 360),
            ((0, 1, 2, 1, 0, 0), 216),
            ((2, 5, 0, 0, 0, 0), -48),
        ),
    ),
}

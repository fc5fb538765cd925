"""Datasets bundled with the package.

Values are transcribed from the published case studies. ``published`` columns are
the reported outputs of each comparator model; they are reference data only.
"""

# fmt: off
BUNDLED = {
    'jiangsu_energy': {
        "case": 'case1',
        "title": 'Energy consumption of Jiangsu province',
        "unit": '10000 tons of standard coal',
        "labels": [2001, 2002, 2003, 2004, 2005, 2006, 2007, 2008, 2009, 2010, 2011, 2012],
        "values": [8881.0, 9593.0, 11950.0, 14207.0, 16360.0, 18412.0, 20369.0, 22235.0, 24010.0, 25711.0, 27329.0, 28872.0],
        "train": 10,
        "pr_degree": 2,
        "arima_order": 'ARIMA(2,1,0)',
        "statistic": 'rms',
        "nipgm": {"lambda": 0.3583, "alpha": 0.6157, "rmse": 0.012},
        "gm_talpha": {"alpha": 4.7427, "rmse": 4.2431},
        "published": {
            'pr': [8224.8818, 10258.6212, 12275.3682, 14275.1227, 16257.8848, 18223.6545, 20172.4318, 22104.2167, 24019.0091, 25916.8091, 27797.6167, 29661.4318],
            'arima': [8881.0, 9593.0, 11950.0, 14206.9611, 16359.2587, 18413.0391, 20368.7184, 22235.1366, 24014.3595, 25702.5611, 27333.0685, 28871.8526],
            'gm11': [8881.0, 11349.6361, 12644.2775, 14086.5972, 15693.4409, 17483.5756, 19477.909, 21699.7341, 24175.0005, 26932.618, 30004.794, 33427.41],
            'dgm11': [8881.0, 11361.2997, 12658.6033, 14104.041, 15714.5278, 17508.91, 19508.1858, 21735.7513, 24217.6741, 26982.9982, 30064.0841, 33496.9875],
            'ngm_kc': [8881.0, 9622.0537, 11984.7933, 14238.3553, 16387.7846, 18437.8931, 20393.27, 22258.2928, 24037.1366, 25733.7834, 27352.0316, 28895.5037],
            'gm_talpha': [8881.0, 10277.1738, 11948.6092, 13860.9157, 16008.5593, 18356.5814, 20829.7995, 23300.5917, 25574.9477, 27376.4503, 28327.8106, 27929.5304],
            'nipgm': [8881.0, 9590.5191, 11949.822, 14204.8033, 16357.5988, 18411.1219, 20369.0361, 22235.4601, 24014.7434, 25711.3159, 27329.5865, 28873.8775],
        },
        "published_ape": {
            'pr': [7.3879, 6.9386, 2.7227, 0.4795, 0.6242, 1.0229, 0.965, 0.5882, 0.0375, 0.8005, 1.7147, 2.7342],
            'arima': [0.0, 0.0, 0.0, 0.0003, 0.0045, 0.0056, 0.0014, 0.0006, 0.0182, 0.0328, 0.0149, 0.0005],
            'gm11': [0.0, 18.3116, 5.8099, 0.8475, 4.0743, 5.0425, 4.3747, 2.4073, 0.6872, 4.7513, 9.791, 15.778],
            'dgm11': [0.0, 18.4332, 5.9297, 0.7247, 3.9454, 4.9049, 4.2261, 2.2453, 0.8649, 4.9473, 10.008, 16.0189],
            'ngm_kc': [0.0, 0.3029, 0.2912, 0.2207, 0.1698, 0.1406, 0.1192, 0.1048, 0.113, 0.0886, 0.0843, 0.0814],
            'gm_talpha': [0.0, 7.132, 0.0116, 2.436, 2.1482, 0.301, 2.2623, 4.7924, 6.5179, 6.4776, 3.6548, 3.2643],
            'nipgm': [0.0, 0.0259, 0.0015, 0.0155, 0.0147, 0.0048, 0.0002, 0.0021, 0.0198, 0.0012, 0.0021, 0.0065],
        },
        "published_metrics": {
            'pr': (2.5635, 2.2821, 2.5147),
            'arima': (0.0127, 0.0105, 0.0124),
            'gm11': (7.1476, 13.1303, 8.5525),
            'dgm11': (7.1742, 13.356, 8.6339),
            'ngm_kc': (0.1885, 0.0829, 0.1741),
            'gm_talpha': (4.3974, 3.465, 4.2431),
            'nipgm': (0.0131, 0.0048, 0.012),
        },
    },
    'hightech_output': {
        "case": 'case2',
        "title": 'Output value of the high technology industry',
        "unit": 'trillion yuan',
        "labels": [2005, 2006, 2007, 2008, 2009, 2010, 2011, 2012, 2013, 2014],
        "values": [3.39, 4.16, 4.97, 5.57, 5.96, 7.45, 8.75, 10.23, 11.6, 12.74],
        "train": 8,
        "pr_degree": 2,
        "arima_order": 'ARIMA(1,1,1)',
        "statistic": 'rms',
        "nipgm": {"lambda": 0.9741, "alpha": 1.685, "rmse": 3.3509},
        "gm_talpha": {"alpha": 1.7464, "rmse": 3.799},
        "published": {
            'pr': [3.5883, 4.0483, 4.6671, 5.4448, 6.3812, 7.4764, 8.7305, 10.1433, 11.715, 13.4455],
            'arima': [3.39, 4.1346, 4.9564, 5.8125, 6.2863, 6.4872, 8.6574, 10.0763, 11.7224, 13.0781],
            'gm11': [3.39, 4.0566, 4.7205, 5.4932, 6.3922, 7.4385, 8.656, 10.0727, 11.7214, 13.6399],
            'dgm11': [3.39, 4.065, 4.7317, 5.5077, 6.4111, 7.4626, 8.6866, 10.1113, 11.7697, 13.7],
            'ngm_kc': [3.39, 4.2669, 4.7987, 5.4628, 6.292, 7.3276, 8.6209, 10.2358, 12.2525, 14.771],
            'gm_talpha': [3.39, 4.0401, 4.6819, 5.4379, 6.3226, 7.3535, 8.5505, 9.9369, 11.5393, 13.3884],
            'nipgm': [3.39, 4.1934, 4.7482, 5.5057, 6.4382, 7.5267, 8.7567, 10.1168, 11.5974, 13.1903],
        },
        "published_ape": {
            'pr': [5.8505, 2.6843, 6.0937, 2.2484, 7.067, 0.3547, 0.2231, 0.8472, 0.9914, 5.5375],
            'arima': [0.0, 0.61, 0.2743, 4.3538, 5.4752, 12.9233, 1.0587, 1.5021, 1.055, 2.6538],
            'gm11': [0.0, 2.4864, 5.0197, 1.3797, 7.2524, 0.1545, 1.0745, 1.5371, 1.0466, 7.0636],
            'dgm11': [0.0, 2.2845, 4.7952, 1.1178, 7.5685, 0.1689, 0.7251, 1.1607, 1.4625, 7.5356],
            'ngm_kc': [0.0, 2.5706, 3.4465, 1.9251, 5.5713, 1.6425, 1.4759, 0.0568, 5.6253, 15.9419],
            'gm_talpha': [0.0, 2.8812, 5.7974, 2.3725, 6.0843, 1.2957, 2.2802, 2.8655, 0.5234, 5.0893],
            'nipgm': [0.0, 0.8037, 4.4626, 1.1541, 8.0236, 1.0293, 0.0768, 1.1065, 0.0227, 3.5346],
        },
        "published_metrics": {
            'pr': (3.784, 3.9779, 3.8279),
            'arima': (5.6032, 3.0643, 5.0324),
            'gm11': (3.5741, 5.0492, 3.9498),
            'dgm11': (3.5586, 5.4279, 4.0493),
            'ngm_kc': (2.8812, 11.9538, 6.1815),
            'gm_talpha': (3.773, 3.6176, 3.739),
            'nipgm': (3.5569, 2.4994, 3.3509),
        },
    },
    'grain': {
        "case": 'case3',
        "title": "China's grain production",
        "unit": '10000 tons',
        "labels": [2003, 2004, 2005, 2006, 2007, 2008, 2009, 2010, 2011, 2012, 2013, 2014, 2015],
        "values": [43069.5, 46946.9, 48402.2, 49804.2, 50160.28, 52870.92, 53082.08, 54647.71, 57120.8, 58957.97, 60193.84, 60702.6, 62143.9],
        "train": 10,
        "pr_degree": 2,
        "arima_order": 'ARIMA(2,1,1)',
        "statistic": 'rms',
        "nipgm": {"lambda": 0.8965, "alpha": 0.0045, "rmse": 0.9957},
        "gm_talpha": {"alpha": 1.1714, "rmse": 1.0867},
        "published": {
            'pr': [44309.6857, 45980.304, 47624.1546, 49241.2375, 50831.5528, 52395.1004, 53931.8804, 55441.8927, 56925.1374, 58381.6145, 59811.3238, 61214.2656, 62590.4396],
            'arima': [43069.5, 46946.9, 48066.8211, 49803.3114, 51210.9062, 51688.5287, 54124.0336, 54625.9259, 56033.2806, 58399.7137, 60310.0801, 61615.3786, 62208.5203],
            'gm11': [43069.5, 46813.7925, 48129.9249, 49483.0592, 50874.2359, 52304.5244, 53775.0243, 55286.8661, 56841.2122, 58439.2575, 60082.2305, 61771.3944, 63508.0478],
            'dgm11': [43069.5, 46816.8336, 48133.137, 49486.4496, 50877.8119, 52308.2939, 53778.9953, 55291.047, 56845.6116, 58443.8843, 60087.0942, 61776.5046, 63513.4145],
            'ngm_kc': [43069.5, 47263.8615, 48308.53, 49450.0971, 50697.5506, 52060.712, 53550.3139, 55178.0842, 56956.8388, 58900.5823, 61024.6184, 63345.67, 65882.0115],
            'gm_talpha': [43069.5, 46685.288, 47970.6232, 49305.867, 50686.0227, 52108.7434, 53572.8101, 55077.6047, 56622.8742, 58208.607, 59834.9627, 61502.2275, 63210.7865],
            'nipgm': [43069.5, 47382.744, 47933.223, 49167.2512, 50631.5469, 52179.9439, 53748.7258, 55305.8171, 56833.7626, 58322.6967, 59767.0199, 61163.6716, 62511.1658],
        },
        "published_ape": {
            'pr': [2.8795, 2.0589, 1.6075, 1.1304, 1.3383, 0.9, 0.6009, 1.4533, 0.3425, 0.9776, 0.6355, 0.8429, 0.7186],
            'arima': [0.0, 0.0, 0.6929, 0.0018, 2.0945, 2.2364, 1.9629, 0.0399, 1.9039, 0.9469, 0.1931, 1.5037, 0.104],
            'gm11': [0.0, 0.2835, 0.5625, 0.6448, 1.4233, 1.0713, 1.3054, 1.1696, 0.4895, 0.8798, 0.1854, 1.7607, 2.1951],
            'dgm11': [0.0, 0.2771, 0.5559, 0.638, 1.4305, 1.0642, 1.3129, 1.1772, 0.4818, 0.872, 0.1773, 1.7691, 2.2038],
            'ngm_kc': [0.0, 0.6751, 0.1935, 0.711, 1.0711, 1.5324, 0.8821, 0.9705, 0.287, 0.0973, 1.3802, 4.3541, 6.0153],
            'gm_talpha': [0.0, 0.5573, 0.8916, 1.0006, 1.0481, 1.4416, 0.9245, 0.7867, 0.8717, 1.271, 0.5962, 1.3173, 1.7168],
            'nipgm': [0.0, 0.9284, 0.9689, 1.2789, 0.9395, 1.3069, 1.2559, 1.2043, 0.5025, 1.0775, 0.7091, 0.7596, 0.591],
        },
        "published_metrics": {
            'pr': (1.3519, 0.7373, 1.2275),
            'arima': (1.4238, 0.8773, 1.3087),
            'gm11': (0.947, 1.6282, 1.1556),
            'dgm11': (0.9471, 1.6348, 1.158),
            'ngm_kc': (0.8371, 4.3607, 2.2977),
            'gm_talpha': (1.0073, 1.2959, 1.0867),
            'nipgm': (1.0785, 0.6902, 0.9957),
        },
    },
    'wind_europe': {
        "case": 'europe',
        "title": 'Total wind turbine capacity of Europe',
        "unit": 'MW',
        "labels": [2007, 2008, 2009, 2010, 2011, 2012, 2013, 2014, 2015, 2016, 2017],
        "values": [56748.885, 64943.483, 77019.9934, 86721.9742, 96603.1278, 109884.8729, 120994.6758, 133915.4447, 147637.6457, 161939.8681, 178314.1463],
        "train": 8,
        "pr_degree": 3,
        "arima_order": 'ARIMA(2,1,1)',
        "statistic": 'mean',
        "nipgm": {"lambda": 0.9649, "alpha": 0.0206, "rmse": 0.3799},
        "gm_talpha": {"alpha": 3.6598, "rmse": 1.636},
        "published": {
            'pr': [56446.3721, 65969.7452, 75999.9366, 86540.1637, 97593.6435, 109163.5934, 121253.2304, 133865.7719, 147004.435, 160672.4369, 174872.9948],
            'arima': [56748.885, 64943.483, 75106.1003, 86607.7451, 98309.8152, 108836.2802, 121799.3639, 134856.058, 147994.467, 162535.6398, 177791.4872],
            'gm11': [56748.885, 68007.2739, 76283.1268, 85566.074, 95978.6696, 107658.3813, 120759.4053, 135454.7021, 151938.2798, 170427.7558, 191167.229],
            'dgm11': [56748.885, 68086.5467, 76381.7043, 85687.4822, 96127.0068, 107838.4052, 120976.6332, 135715.525, 152250.0937, 170799.1109, 191608.0023],
            'ngm_kc': [56748.885, 65502.2396, 75799.3255, 86499.704, 97619.1706, 109174.139, 121181.6661, 133659.4765, 146625.9893, 160100.3448, 174102.4332],
            'gm_talpha': [56748.885, 66034.0365, 75715.7796, 86488.2844, 98253.2028, 110841.1855, 124006.1529, 137417.3283, 150649.269, 163169.8761, 174326.2387],
            'nipgm': [56748.885, 64985.6025, 76166.9682, 86832.2696, 97720.3058, 109111.8638, 121167.8665, 134005.8885, 147726.012, 162421.7532, 178185.4696],
        },
        "published_ape": {
            'pr': [0.5331, 1.5802, 1.3244, 0.2096, 1.0253, 0.6564, 0.2137, 0.0371, 0.4289, 0.7827, 1.9298],
            'arima': [0.0, 0.0, 2.4849, 0.1317, 1.7667, 0.9543, 0.6651, 0.7024, 0.2417, 0.3679, 0.2931],
            'gm11': [0.0, 4.7176, 0.9567, 1.3329, 0.6464, 2.0262, 0.1944, 1.1494, 2.913, 5.2414, 7.2081],
            'dgm11': [0.0, 4.8397, 0.8287, 1.1929, 0.4929, 1.8624, 0.0149, 1.3442, 3.1242, 5.4707, 7.4553],
            'ngm_kc': [0.0, 0.8604, 1.5849, 0.2563, 1.0518, 0.6468, 0.1545, 0.1911, 0.6852, 1.1359, 2.362],
            'gm_talpha': [0.0, 1.6792, 1.6933, 0.2695, 1.7081, 0.8703, 2.4889, 2.615, 2.0399, 0.7595, 2.2365],
            'nipgm': [0.0, 0.0649, 1.1075, 0.1272, 1.1565, 0.7035, 0.1431, 0.0675, 0.0599, 0.2976, 0.0722],
        },
        "published_metrics": {
            'pr': (0.721, 1.0471, 0.8188),
            'arima': (0.9579, 0.3009, 0.7608),
            'gm11': (1.5748, 5.1208, 2.6386),
            'dgm11': (1.5108, 5.3501, 2.6626),
            'ngm_kc': (0.678, 1.3944, 0.8929),
            'gm_talpha': (1.6178, 1.6786, 1.636),
            'nipgm': (0.4815, 0.1432, 0.38),
        },
        "forecast": {"labels": [2017, 2018, 2019, 2020], "values": [178314.1463, 195111.4074, 213297.6361, 232847.4225], "growth": [10.1113, 9.42, 9.3209, 9.1655], "mean_growth": 9.5045},
    },
    'wind_north_america': {
        "case": 'north_america',
        "title": 'Total wind turbine capacity of North America',
        "unit": 'MW',
        "labels": [2007, 2008, 2009, 2010, 2011, 2012, 2013, 2014, 2015, 2016, 2017],
        "values": [18810.0, 27940.0, 38933.0, 45054.0, 53485.0, 67934.0, 71093.0, 78340.0, 87058.42, 96994.0, 104070.0],
        "train": 8,
        "pr_degree": 1,
        "arima_order": 'ARIMA(2,1,1)',
        "statistic": 'mean',
        "nipgm": {"lambda": 0.9086, "alpha": 0.2637, "rmse": 2.4236},
        "gm_talpha": {"alpha": 1.64, "rmse": 5.4472},
        "published": {
            'pr': [19869.0833, 28534.6667, 37200.25, 45865.8333, 54531.4167, 63197.0, 71862.5833, 80528.1667, 89193.75, 97859.3333, 106524.9167],
            'arima': [18810.0, 27940.0, 37524.5787, 48161.909, 54092.3164, 62249.4276, 76226.4435, 79298.1398, 86307.0648, 94743.415, 104358.1253],
            'gm11': [18810.0, 33430.1116, 38866.9876, 45188.0851, 52537.2085, 61081.55, 71015.4928, 82565.0334, 95992.9231, 111604.6455, 129755.3663],
            'dgm11': [18810.0, 33498.4981, 38957.6409, 45306.4426, 52689.8882, 61276.5902, 71262.6395, 82876.0831, 96382.1325, 112089.2193, 130356.0397],
            'ngm_kc': [18810.0, 28055.3165, 37830.7879, 47064.795, 55787.3295, 64026.722, 71809.7338, 79161.6438, 86106.3307, 92666.3508, 98863.0108],
            'gm_talpha': [18810.0, 23953.1486, 34862.07, 45973.1476, 56359.8353, 65947.8132, 74849.8077, 83193.0517, 91081.8126, 98595.3608, 105793.3036],
            'nipgm': [18810.0, 27265.0412, 37921.7659, 46970.6018, 55366.0191, 63448.7993, 71379.194, 79243.8894, 87093.9468, 94961.1729, 102866.1383],
        },
        "published_ape": {
            'pr': [5.6304, 2.1284, 4.4506, 1.8019, 1.9565, 6.9729, 1.0825, 2.7932, 2.4528, 0.8922, 2.3589],
            'arima': [0.0, 0.0, 3.6176, 6.8982, 1.1355, 8.3678, 7.2207, 1.2231, 0.863, 2.3203, 0.2769],
            'gm11': [0.0, 19.6496, 0.1696, 0.2976, 1.7721, 10.0869, 0.109, 5.3932, 10.2627, 15.0635, 24.6809],
            'dgm11': [0.0, 19.8944, 0.0633, 0.5603, 1.4866, 9.7998, 0.2386, 5.7903, 10.7097, 15.563, 25.258],
            'ngm_kc': [0.0, 0.4127, 2.831, 4.4631, 4.3046, 5.7516, 1.0082, 1.0488, 1.0936, 4.4618, 5.0034],
            'gm_talpha': [0.0, 14.2693, 10.4562, 2.0401, 5.375, 2.9237, 5.2844, 6.1949, 4.6215, 1.651, 1.6559],
            'nipgm': [0.0, 2.4157, 2.5974, 4.254, 3.5169, 6.6023, 0.4026, 1.1538, 0.0408, 2.0958, 1.1568],
        },
        "published_metrics": {
            'pr': (3.0266, 1.9013, 2.689),
            'arima': (4.0661, 1.1534, 3.1923),
            'gm11': (5.354, 16.669, 8.7485),
            'dgm11': (5.4048, 17.1769, 8.9364),
            'ngm_kc': (2.8314, 3.5196, 3.0379),
            'gm_talpha': (6.6491, 2.6428, 5.4472),
            'nipgm': (2.9918, 1.0978, 2.4236),
        },
        "forecast": {"labels": [2017, 2018, 2019, 2020], "values": [104070.0, 110822.4755, 118839.3441, 126922.9203], "growth": [7.2953, 6.4884, 7.234, 6.8021], "mean_growth": 6.9549},
    },
    'wind_asia': {
        "case": 'asia',
        "title": 'Total wind turbine capacity of Asia',
        "unit": 'MW',
        "labels": [2007, 2008, 2009, 2010, 2011, 2012, 2013, 2014, 2015, 2016, 2017],
        "values": [15327.326, 22356.357, 33737.507, 48622.327, 69073.814, 87572.685, 105496.332, 129273.782, 167528.327, 189684.637, 209977.234],
        "train": 8,
        "pr_degree": 2,
        "arima_order": 'ARIMA(2,1,2)',
        "statistic": 'mean',
        "nipgm": {"lambda": 0.9014, "alpha": 1.0978, "rmse": 3.3256},
        "gm_talpha": {"alpha": 2.184, "rmse": 4.5568},
        "published": {
            'pr': [13614.4778, 23523.2229, 35665.8868, 50042.4692, 66652.9702, 85497.3899, 106575.7282, 129887.9851, 155434.1606, 183214.2548, 213228.2675],
            'arima': [15327.326, 24442.2317, 36990.6742, 44795.2174, 66555.9999, 85642.7395, 109051.7419, 124833.1761, 156064.2433, 194671.4654, 217864.4953],
            'gm11': [15327.326, 30411.7783, 39064.6946, 50179.5833, 64456.9375, 82796.5584, 106354.263, 136614.7274, 175485.0554, 225414.97, 289551.2019],
            'dgm11': [15327.326, 30593.2156, 39349.6869, 50612.4585, 65098.8905, 83731.6674, 107697.5672, 138523.0502, 178171.4847, 229168.1992, 294761.3285],
            'ngm_kc': [15327.326, 20761.8645, 34761.6976, 50156.2873, 67084.5888, 85699.4005, 106168.7439, 128677.3797, 153428.4759, 180645.4414, 210573.9425],
            'gm_talpha': [15327.326, 19571.5731, 32086.3194, 49814.96, 69887.5839, 91305.4153, 113672.2917, 136798.4924, 160573.3168, 184921.4951, 209786.6733],
            'nipgm': [15327.326, 21279.7344, 34904.5823, 50316.455, 67445.5987, 86273.527, 106801.6654, 129041.2131, 153008.85, 178724.6215, 206210.7892],
        },
        "published_ape": {
            'pr': [11.1751, 5.2194, 5.7158, 2.9208, 3.5047, 2.3698, 1.0232, 0.4751, 7.2192, 3.4111, 1.5483],
            'arima': [0.0, 9.3301, 9.6426, 7.8711, 3.6451, 2.2038, 3.3702, 3.435, 6.8431, 4.6528, 3.7562],
            'gm11': [0.0, 36.0319, 15.7901, 3.2028, 6.684, 5.4539, 0.8132, 5.6786, 4.7495, 18.8367, 37.8965],
            'dgm11': [0.0, 36.8435, 16.6348, 4.093, 5.7546, 4.3861, 2.0866, 7.1548, 6.353, 20.8154, 40.3778],
            'ngm_kc': [0.0, 7.1322, 3.0358, 3.1548, 2.8799, 2.1391, 0.6374, 0.4613, 8.4164, 4.7654, 0.2842],
            'gm_talpha': [0.0, 12.4563, 4.8942, 2.4529, 1.1781, 4.2624, 7.75, 5.8208, 4.1515, 2.5111, 0.0908],
            'nipgm': [0.0, 4.8157, 3.4593, 3.4843, 2.3572, 1.4835, 1.2373, 0.1799, 8.6669, 5.778, 1.7937],
        },
        "published_metrics": {
            'pr': (3.0327, 4.0595, 3.3407),
            'arima': (5.6426, 5.0841, 5.475),
            'gm11': (10.5221, 20.4942, 13.5137),
            'dgm11': (10.9933, 22.5154, 14.45),
            'ngm_kc': (2.7772, 4.4887, 3.2906),
            'gm_talpha': (5.545, 2.2511, 4.5568),
            'nipgm': (2.431, 5.4129, 3.3256),
        },
        "forecast": {"labels": [2017, 2018, 2019, 2020], "values": [209977.234, 235491.1594, 266590.6714, 299535.1338], "growth": [10.6981, 12.1508, 13.2062, 12.3577], "mean_growth": 12.1032},
    },
    'wind_world': {
        "case": 'world',
        "title": 'Total wind turbine capacity of the world',
        "unit": 'MW',
        "labels": [2007, 2008, 2009, 2010, 2011, 2012, 2013, 2014, 2015, 2016, 2017],
        "values": [91894.008, 116511.623, 151655.8934, 182901.3012, 222516.8618, 269853.3279, 303112.5198, 351617.6747, 417144.1127, 467698.4951, 514798.1313],
        "train": 8,
        "pr_degree": 2,
        "arima_order": 'ARIMA(2,1,1)',
        "statistic": 'mean',
        "nipgm": {"lambda": 0.7161, "alpha": 1.3276, "rmse": 1.4391},
        "gm_talpha": {"alpha": 4.0898, "rmse": 2.8605},
        "published": {
            'pr': [89895.794, 119032.8856, 150938.8752, 185613.763, 223057.5489, 263270.2329, 306251.815, 352002.2953, 400521.6737, 451809.9502, 505867.1249],
            'arima': [91894.008, 116511.623, 152167.2895, 188450.4898, 221338.5422, 262789.1973, 313238.8541, 348668.0199, 399131.1492, 469387.1588, 524331.1065],
            'gm11': [91894.008, 129789.1184, 153837.9115, 182342.7364, 216129.257, 256176.1257, 303643.3302, 359905.7943, 426593.2028, 505637.2072, 599327.3771],
            'dgm11': [91894.008, 130130.5184, 154305.9948, 182972.7593, 216965.1975, 257272.7062, 305068.4908, 361743.7133, 428947.9839, 508637.3755, 603131.3573],
            'ngm_kc': [91894.008, 115887.4467, 149773.8023, 185600.822, 223479.6474, 263527.7848, 305869.4703, 350636.0549, 397966.4121, 448007.3685, 500914.1595],
            'gm_talpha': [91894.008, 118956.8735, 148814.4211, 184697.3033, 226537.3484, 273643.5552, 324527.1561, 376684.5272, 426326.0794, 468036.6722, 494349.5839],
            'nipgm': [91894.008, 117442.6582, 151376.2996, 187037.5395, 224763.4997, 264896.4706, 307861.129, 354209.7165, 404666.5259, 460180.8872, 521994.0838],
        },
        "published_ape": {
            'pr': [2.1745, 2.164, 0.4728, 1.483, 0.243, 2.4395, 1.0357, 0.1094, 3.9848, 3.3972, 1.7349],
            'arima': [0.0, 0.0, 0.3372, 3.034, 0.5295, 2.6178, 3.3408, 0.8389, 4.3182, 0.3611, 1.8518],
            'gm11': [0.0, 11.3959, 1.4388, 0.3054, 2.8706, 5.0684, 0.1751, 2.3571, 2.2652, 8.1118, 16.4199],
            'dgm11': [0.0, 11.6889, 1.7474, 0.0391, 2.4949, 4.662, 0.6453, 2.8798, 2.8297, 8.7533, 17.1588],
            'ngm_kc': [0.0, 0.5357, 1.241, 1.4759, 0.4327, 2.3441, 0.9095, 0.2792, 4.5974, 4.2102, 2.697],
            'gm_talpha': [0.0, 2.0987, 1.8736, 0.982, 1.8068, 1.4046, 7.0649, 7.129, 2.2011, 0.0723, 3.9721],
            'nipgm': [0.0, 0.7991, 0.1844, 2.2615, 1.0096, 1.8369, 1.5666, 0.7372, 2.9912, 1.6074, 1.3978],
        },
        "published_metrics": {
            'pr': (1.1353, 3.039, 1.7064),
            'arima': (1.5283, 2.177, 1.7229),
            'gm11': (3.373, 8.9323, 5.0408),
            'dgm11': (3.4511, 9.5806, 5.2899),
            'ngm_kc': (1.0312, 3.8349, 1.8723),
            'gm_talpha': (3.1942, 2.0819, 2.8605),
            'nipgm': (1.1993, 1.9988, 1.4392),
        },
        "forecast": {"labels": [2017, 2018, 2019, 2020], "values": [514798.1313, 591725.3917, 671483.3296, 764009.7685], "growth": [10.0705, 14.9432, 13.4789, 13.7794], "mean_growth": 13.068},
    },
}
# fmt: on

#!/usr/bin/env python3
# Copyright 2026 The alalc Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the bundled 100-record MARC-XML sample.

The records are synthetic: names, titles and imprints are drawn from a small
vocabulary with hand-checked ALA-LC Romanizations. A handful of records carry
the defects the corpus pipeline is expected to repair or drop.

    python3 scripts/make_marc_sample.py data/sample/marc_sample.xml
"""

import random
import sys
from xml.sax.saxutils import escape

SEED = 20200701

GIVEN = [
    ('محمد', 'Muḥammad'), ('أحمد', 'Aḥmad'), ('علي', 'ʻAlī'),
    ('حسن', 'Ḥasan'), ('حسين', 'Ḥusayn'), ('إبراهيم', 'Ibrāhīm'),
    ('خالد', 'Khālid'), ('يوسف', 'Yūsuf'), ('سليمان', 'Sulaymān'),
    ('عثمان', 'ʻUthmān'), ('محمود', 'Maḥmūd'), ('نجيب', 'Najīb'),
    ('سعيد', 'Saʻīd'), ('عمر', 'ʻUmar'), ('فاطمة', 'Fāṭimah'),
    ('زينب', 'Zaynab'), ('طه', 'Ṭāhā'), ('جرجي', 'Jurjī'),
    ('توفيق', 'Tawfīq'),
]

SURNAME = [
    ('تيمور', 'Taymūr'), ('محفوظ', 'Maḥfūẓ'), ('حسين', 'Ḥusayn'),
    ('زيدان', 'Zaydān'), ('جبران', 'Jubrān'), ('العقاد', 'al-ʻAqqād'),
    ('الحكيم', 'al-Ḥakīm'), ('عبده', 'ʻAbduh'), ('أمين', 'Amīn'),
    ('رضا', 'Riḍā'), ('السيد', 'al-Sayyid'), ('الخطيب', 'al-Khaṭīb'),
    ('الشايب', 'al-Shāyib'), ('حافظ', 'Ḥāfiẓ'), ('الرافعي', 'al-Rāfiʻī'),
]

TITLES = [
    ('تاريخ الأدب العربي', 'Tārīkh al-adab al-ʻArabī'),
    ('ديوان الشعر', 'Dīwān al-shiʻr'),
    ('قصص قصيرة', 'Qiṣaṣ qaṣīrah'),
    ('دراسات في الأدب الحديث', 'Dirāsāt fī al-adab al-ḥadīth'),
    ('مقدمة في علم اللغة', 'Muqaddimah fī ʻilm al-lughah'),
    ('شرح ديوان المتنبي', 'Sharḥ dīwān al-Mutanabbī'),
    ('تاريخ مصر الحديث', 'Tārīkh Miṣr al-ḥadīth'),
    ('الرواية العربية', 'al-Riwāyah al-ʻArabīyah'),
    ('الفلسفة الإسلامية', 'al-Falsafah al-Islāmīyah'),
    ('رسالة في النحو', 'Risālah fī al-naḥw'),
    ('مجلة الأدب', 'Majallat al-adab'),
    ('حضارة العرب', 'Ḥaḍārat al-ʻArab'),
    ('الثقافة والسياسة', 'al-Thaqāfah wa-al-siyāsah'),
    ('الشعر والشعراء', 'al-Shiʻr wa-al-shuʻarāʼ'),
    ('قصة مدينة', 'Qiṣṣat madīnah'),
    ('ثلاث روايات', 'Thalāth riwāyāt'),
    ('الأيام', 'al-Ayyām'),
    ('قبر', 'Qabr'),
    ('بين القصرين', 'Bayna al-qaṣrayn'),
    ('زقاق المدق', 'Zuqāq al-Midaqq'),
    ('عودة الروح', 'ʻAwdat al-rūḥ'),
    ('النبي', 'al-Nabī'),
    ('الأجنحة المتكسرة', 'al-Ajniḥah al-mutakassirah'),
    ('في الشعر الجاهلي', 'Fī al-shiʻr al-jāhilī'),
    ('تاريخ آداب العرب', 'Tārīkh ādāb al-ʻArab'),
    ('الاقتصاد العربي', 'al-Iqtiṣād al-ʻArabī'),
    ('علوم القرآن', 'ʻUlūm al-Qurʼān'),
    ('كتاب الأغاني', 'Kitāb al-aghānī'),
    ('المدينة والريف', 'al-Madīnah wa-al-rīf'),
    ('دراسة في الحضارة الإسلامية', 'Dirāsah fī al-ḥaḍārah al-Islāmīyah'),
    ('أدب الرحلة', 'Adab al-riḥlah'),
    ('الحب والحرب', 'al-Ḥubb wa-al-ḥarb'),
    ('من الشعر الحديث', 'Min al-shiʻr al-ḥadīth'),
    ('على هامش السيرة', 'ʻAlá hāmish al-sīrah'),
    ('مع المتنبي', 'Maʻa al-Mutanabbī'),
    ('حديث الأربعاء', 'Ḥadīth al-arbiʻāʼ'),
    ('الكتاب والكتابة', 'al-Kitāb wa-al-kitābah'),
    ('لغة الشعر', 'Lughat al-shiʻr'),
    ('تاريخ الفكر العربي', 'Tārīkh al-fikr al-ʻArabī'),
    ('الأدب والحضارة في مصر', 'al-Adab wa-al-ḥaḍārah fī Miṣr'),
]

PLACES = [
    ('القاهرة', 'al-Qāhirah'), ('بيروت', 'Bayrūt'), ('دمشق', 'Dimashq'),
    ('بغداد', 'Baghdād'), ('تونس', 'Tūnis'), ('الرياض', 'al-Riyāḍ'),
    ('الكويت', 'al-Kuwayt'), ('عمان', 'ʻAmmān'),
    ('الإسكندرية', 'al-Iskandarīyah'),
]

PUBLISHERS = [
    ('دار المعارف', 'Dār al-Maʻārif'),
    ('دار الشروق', 'Dār al-Shurūq'),
    ('مكتبة مصر', 'Maktabat Miṣr'),
    ('دار الكتاب العربي', 'Dār al-Kitāb al-ʻArabī'),
    ('المطبعة السلفية', 'al-Maṭbaʻah al-Salafīyah'),
    ('دار العلم', 'Dār al-ʻIlm'),
    ('مكتبة النهضة المصرية', 'Maktabat al-Nahḍah al-Miṣrīyah'),
    ('دار الفكر', 'Dār al-Fikr'),
    ('عالم الكتب', 'ʻĀlam al-Kutub'),
    ('الهيئة المصرية العامة للكتاب', 'al-Hayʼah al-Miṣrīyah al-ʻĀmmah lil-Kitāb'),
]

SERIES = [
    ('سلسلة الأدب العربي', 'Silsilat al-adab al-ʻArabī'),
    ('سلسلة الدراسات الإسلامية', 'Silsilat al-dirāsāt al-Islāmīyah'),
]

EDITIONS = [
    ('الطبعة الأولى.', 'al-Ṭabʻah al-ūlá.'),
    ('الطبعة 2.', 'al-Ṭabʻah 2.'),
]

NOTES = [
    ('يتضمن ببليوغرافيا.', 'Includes bibliographical references.'),
    ('نص عربي.', 'Arabic text.'),
]

PERSIAN_TITLES = [
    ('تاریخ ادبیات', 'Tārīkh-i adabīyāt'),
    ('دیوان حافظ', 'Dīvān-i Ḥāfiẓ'),
]

ENGLISH_TITLES = [
    'Arabic literature in the twentieth century /',
    'Cataloguing Arabic manuscripts /',
    'The Arab world today /',
]

ARABIC_INDIC = str.maketrans('0123456789', '٠١٢٣٤٥٦٧٨٩')


def fixed_008(year, lang):
    text = f'850101s{year}    xx ' + ' ' * 17 + lang + ' d'
    assert len(text) == 40, len(text)
    return text


class Record:
    def __init__(self, record_id, lang, year):
        self.record_id = record_id
        self.lang = lang
        self.year = year
        self.fields = []
        self.occurrence = 0

    def pair(self, tag, subfields_roman, subfields_arabic, ind='  ', linked=True):
        if linked:
            self.occurrence += 1
            occ = f'{self.occurrence:02d}'
            self.fields.append((tag, ind, [('6', f'880-{occ}')] + subfields_roman))
        else:
            occ = '00'
        self.fields.append(('880', ind, [('6', f'{tag}-{occ}/(3/r')] + subfields_arabic))

    def plain(self, tag, subfields, ind='  '):
        self.fields.append((tag, ind, subfields))

    def xml(self):
        out = ['  <record>', '    <leader>00000nam a2200000 a 4500</leader>',
               f'    <controlfield tag="001">{escape(self.record_id)}</controlfield>',
               f'    <controlfield tag="008">{fixed_008(self.year, self.lang)}</controlfield>']
        # MARC order: regular fields by tag, then 880s.
        regular = [f for f in self.fields if f[0] != '880']
        alternates = [f for f in self.fields if f[0] == '880']
        for tag, ind, subfields in sorted(regular, key=lambda f: f[0]) + alternates:
            out.append(f'    <datafield tag="{tag}" ind1="{ind[0]}" ind2="{ind[1]}">')
            for code, value in subfields:
                out.append(f'      <subfield code="{code}">{escape(value)}</subfield>')
            out.append('    </datafield>')
        out.append('  </record>')
        return '\n'.join(out)


def arabic_record(rng, n, defect):
    year = rng.randint(1900, 1999)
    rec = Record(f'alalc-{n:04d}', 'ara', year)
    given = rng.choice(GIVEN)
    surname = rng.choice(SURNAME)
    born = rng.randint(1850, 1910)
    dates = f'{born}-{born + rng.randint(40, 90)}.'
    title = rng.choice(TITLES)
    place = rng.choice(PLACES)
    publisher = rng.choice(PUBLISHERS)
    year_ar = str(year).translate(ARABIC_INDIC) if rng.random() < 0.15 else str(year)

    if defect == 'only-notes':
        note = rng.choice(NOTES)
        rec.pair('500', [('a', note[1])], [('a', note[0])])
        return rec

    name_roman = [('a', f'{surname[1]}, {given[1]},'), ('d', dates)]
    name_arabic = [('a', f'{surname[0]}، {given[0]}،'), ('d', dates)]
    if defect == 'bidi':
        name_arabic = [('a', f'.{surname[0]}، {given[0]}، {dates[:-1]}')]
    rec.pair('100', name_roman, name_arabic, ind='1 ')

    t_ar, t_ro = title
    resp_ar = f'{given[0]} {surname[0]}.'
    resp_ro = f'{given[1]} {surname[1]}.'
    if defect == 'separated-wa' and ' و' not in t_ar:
        t_ar, t_ro = 'الشعر والشعراء', 'al-Shiʻr wa-al-shuʻarāʼ'
    if defect == 'separated-wa':
        t_ar = t_ar.replace(' و', ' و ')
    if defect == 'mismatch':
        t_ro = t_ro + ' al-jadīd'
    if defect == 'spacing':
        resp_ar = f'{given[0]} {surname[0]} .'
    rec.pair('245', [('a', f'{t_ro} /'), ('c', resp_ro)],
             [('a', f'{t_ar} /'), ('c', resp_ar)], ind='10')

    if rng.random() < 0.25:
        ed = rng.choice(EDITIONS)
        rec.pair('250', [('a', ed[1])], [('a', ed[0])])

    pub_ro = f'{publisher[1]},'
    if defect == 'roman-arabic-comma':
        pub_ro = f'{publisher[1]}،'
    rec.pair('260', [('a', f'{place[1]} :'), ('b', pub_ro), ('c', f'{year}.')],
             [('a', f'{place[0]} :'), ('b', f'{publisher[0]}،'), ('c', f'{year_ar}.')])

    rec.plain('300', [('a', f'{rng.randint(80, 600)} p. ;'), ('c', '24 cm.')])

    if rng.random() < 0.2:
        series = rng.choice(SERIES)
        number = str(rng.randint(1, 40))
        rec.pair('490', [('a', f'{series[1]} ;'), ('v', number)],
                 [('a', f'{series[0]} ؛'), ('v', number)], ind='0 ')

    if rng.random() < 0.3 or defect == 'unlinked':
        note = rng.choice(NOTES)
        rec.pair('500', [('a', note[1])], [('a', note[0])], linked=defect != 'unlinked')
    return rec


def english_record(rng, n):
    rec = Record(f'alalc-{n:04d}', 'eng', rng.randint(1950, 2015))
    rec.plain('245', [('a', rng.choice(ENGLISH_TITLES)), ('c', 'edited by J. Smith.')])
    rec.plain('260', [('a', 'London :'), ('b', 'Routledge,'), ('c', f'{rec.year}.')])
    return rec


def persian_record(rng, n):
    rec = Record(f'alalc-{n:04d}', 'per', rng.randint(1950, 2015))
    title = rng.choice(PERSIAN_TITLES)
    rec.pair('245', [('a', title[1] + '.')], [('a', title[0] + '.')], ind='00')
    rec.pair('260', [('a', 'Tihrān :'), ('b', 'Amīr Kabīr,'), ('c', f'{rec.year}.')],
             [('a', 'تهران :'), ('b', 'امیر کبیر،'), ('c', f'{rec.year}.')])
    return rec


DEFECTS = {
    7: 'separated-wa', 18: 'separated-wa', 13: 'bidi', 19: 'roman-arabic-comma',
    23: 'mismatch', 29: 'unlinked', 31: 'only-notes', 37: 'spacing', 44: 'bidi',
}


def main():
    rng = random.Random(SEED)
    languages = ['ara'] * 80 + ['eng'] * 12 + ['per'] * 8
    rng.shuffle(languages)
    # Keep the defect carriers Arabic.
    for n in DEFECTS:
        if languages[n - 1] != 'ara':
            swap = next(i for i, lang in enumerate(languages)
                        if lang == 'ara' and (i + 1) not in DEFECTS)
            languages[n - 1], languages[swap] = languages[swap], languages[n - 1]
    records = []
    for n, lang in enumerate(languages, start=1):
        if lang == 'ara':
            records.append(arabic_record(rng, n, DEFECTS.get(n)))
        elif lang == 'eng':
            records.append(english_record(rng, n))
        else:
            records.append(persian_record(rng, n))
    body = '\n'.join(r.xml() for r in records)
    text = ('<?xml version="1.0" encoding="UTF-8"?>\n'
            '<collection xmlns="http://www.loc.gov/MARC21/slim">\n'
            f'{body}\n</collection>\n')
    with open(sys.argv[1], 'w', encoding='utf-8') as f:
        f.write(text)


if __name__ == '__main__':
    main()

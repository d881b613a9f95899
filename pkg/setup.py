#!/usr/bin/python
import setuptools

setuptools.setup(
    name='zetabench',
    version='0.1.0',
    packages=setuptools.find_packages(exclude=['tests', 'examples*']),
    install_requires=[
        'numpy',
        'scipy',
        'tqdm',
        'beautifulsoup4>=4.7.1',
        'lxml',
        'requests>=2.21.0',
        'Flask>=2.0',
    ],
    tests_require=[
        'pytest',
        'mpmath',
    ],
    zip_safe=False,
    test_suite='py.test',
    entry_points={
        'console_scripts': ['zetabench=zetabench.cli:main'],
    },
)

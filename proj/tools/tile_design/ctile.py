from vtile import *
W_OF={1:'w1',2:'w2',3:'w1'}; C_OF={1:'c1',2:'c3',3:'c2'}
def ctile(sides, core, routes, pairs=(1,2,3)):
    d=Design(square())
    d.add('m',core['m'])
    for n in ('w1','w2'):
        if n=='w1' or 2 in pairs: d.add(n,core[n]); d.edge('m',n)
    for k in pairs:
        d.add(C_OF[k],core[C_OF[k]]); d.edge(W_OF[k],C_OF[k])
    for k,(side,o) in sides.items():
        first,second=SLOT[side]
        ts,fs=(first,second) if o=='TF' else (second,first)
        nx,ny=NORM[side]
        for s,p in (('t',ts),('f',fs)):
            d.add(f'{s}{k},15',p,fixed=True,tf=True); d.add(f'{s}{k},14',(p[0]+nx,p[1]+ny),fixed=True)
            d.edge(f'{s}{k},14',f'{s}{k},15')
            d.add(f'{s}{k},1',core[f'{s}{k}'])
            sp=d.path([f'{s}{k},{j}' for j in range(1,15)],routes[f'{s}{k}'])
            print(s,k,'spacing',round(sp,3))
        d.edge(C_OF[k],f't{k},1'); d.edge('m',f'f{k},1')
    return d
def crun(name, sides, core, R, pairs=(1,2,3), rounds=12):
    d=ctile(sides,core,R,pairs)
    d.plot(f'tiles/{name}_init.png')
    rng=np.random.default_rng(1)
    for r in range(rounds):
        if r>=2:
            for n in d.pos:
                if n not in d.fixed: d.pos[n]=d.pos[n]+rng.normal(0,0.04,2)
        v=d.optimize(nmin=1.04,emax=0.96,gab=0.1); b=d.check(); print(name,'loss',round(v,3),'bad',len(b),b[:6],flush=True)
        if not b: break
    d.plot(f'tiles/{name}.png'); d.dump(f'tiles/{name}.json')
    return d,b
